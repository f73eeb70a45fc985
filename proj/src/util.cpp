#include "latcheck/util.hpp"

#include <stdexcept>

namespace latcheck {

std::string to_hex(u64 v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

static const char* b64_alphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_encode(const std::vector<u8>& bytes) {
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::size_t i = 0;
    while (i + 3 <= bytes.size()) {
        u32 v = (u32(bytes[i]) << 16) | (u32(bytes[i + 1]) << 8) | bytes[i + 2];
        out += b64_alphabet[(v >> 18) & 63];
        out += b64_alphabet[(v >> 12) & 63];
        out += b64_alphabet[(v >> 6) & 63];
        out += b64_alphabet[v & 63];
        i += 3;
    }
    std::size_t rest = bytes.size() - i;
    if (rest == 1) {
        u32 v = u32(bytes[i]) << 16;
        out += b64_alphabet[(v >> 18) & 63];
        out += b64_alphabet[(v >> 12) & 63];
        out += "==";
    } else if (rest == 2) {
        u32 v = (u32(bytes[i]) << 16) | (u32(bytes[i + 1]) << 8);
        out += b64_alphabet[(v >> 18) & 63];
        out += b64_alphabet[(v >> 12) & 63];
        out += b64_alphabet[(v >> 6) & 63];
        out += '=';
    }
    return out;
}

static int b64_value(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
}

std::vector<u8> base64_decode(const std::string& text) {
    if (text.size() % 4 != 0) throw std::invalid_argument("base64: length not a multiple of 4");
    std::vector<u8> out;
    out.reserve(text.size() / 4 * 3);
    for (std::size_t i = 0; i < text.size(); i += 4) {
        int pad = 0;
        u32 v = 0;
        for (int k = 0; k < 4; ++k) {
            char c = text[i + k];
            if (c == '=') {
                if (i + 4 != text.size() || k < 2) throw std::invalid_argument("base64: bad padding");
                ++pad;
                v <<= 6;
                continue;
            }
            if (pad) throw std::invalid_argument("base64: data after padding");
            int d = b64_value(c);
            if (d < 0) throw std::invalid_argument("base64: bad character");
            v = (v << 6) | u32(d);
        }
        out.push_back(u8((v >> 16) & 0xff));
        if (pad < 2) out.push_back(u8((v >> 8) & 0xff));
        if (pad < 1) out.push_back(u8(v & 0xff));
    }
    return out;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(u64 n) {
    if (n < 2) return false;
    u64 p = 2;
    while (p * p <= n && n % p != 0) p += (p == 2) ? 1 : 2;
    if (n % p != 0) p = n;  // n itself prime
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (u64 p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace latcheck
