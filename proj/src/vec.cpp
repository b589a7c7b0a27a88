#include "cubegeo/vec.hpp"

namespace cubegeo {

Vec Vec::parse(const std::string& s, std::size_t expect_dim) {
    std::vector<Rat> coords;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string part = s.substr(start, comma == std::string::npos ? comma : comma - start);
        coords.push_back(Rat::parse(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (expect_dim && coords.size() != expect_dim)
        throw std::invalid_argument("point \"" + s + "\": expected " +
                                    std::to_string(expect_dim) + " coordinates, got " +
                                    std::to_string(coords.size()));
    return Vec(std::move(coords));
}

} // namespace cubegeo
