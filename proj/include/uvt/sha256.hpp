#ifndef UVT_SHA256_HPP
#define UVT_SHA256_HPP

// Needs OpenSSL libcrypto at link time.

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

#include <openssl/evp.h>

namespace uvt {

/// Lowercase hex SHA-256 of the input bytes.
inline std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("SHA-256 failed");
  std::string out(len * 2, '0');
  for (unsigned int i = 0; i < len; ++i) std::snprintf(&out[2 * i], 3, "%02x", md[i]);
  return out;
}

}  // namespace uvt

#endif  // UVT_SHA256_HPP
