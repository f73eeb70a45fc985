#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latcheck {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

// FNV-1a, 64 bit.  Used for cache keys and bitset hashing; every use that
// needs collision safety pairs the hash with a full equality check.
constexpr u64 fnv1a_init = 0xcbf29ce484222325ull;
constexpr u64 fnv1a_prime = 0x100000001b3ull;

inline u64 fnv1a_bytes(const void* data, std::size_t n, u64 h = fnv1a_init) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= fnv1a_prime;
    }
    return h;
}

inline u64 fnv1a_str(const std::string& s, u64 h = fnv1a_init) {
    return fnv1a_bytes(s.data(), s.size(), h);
}

std::string to_hex(u64 v);

std::string base64_encode(const std::vector<u8>& bytes);
std::vector<u8> base64_decode(const std::string& text);  // throws on bad input

bool is_prime(u64 n);
// n = p^k for a prime p and k >= 1
bool is_prime_power(u64 n);
// ascending list of distinct prime divisors
std::vector<u64> prime_divisors(u64 n);

std::string trim(const std::string& s);

}  // namespace latcheck
