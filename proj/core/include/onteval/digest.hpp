// digest.hpp : content hashing for report provenance
#ifndef ONTEVAL_DIGEST_HPP
#define ONTEVAL_DIGEST_HPP

#include <string>
#include <string_view>

namespace onteval {

// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace onteval

#endif  // ONTEVAL_DIGEST_HPP
