#pragma once

#include <stdexcept>
#include <string>

namespace latcheck {

// Status codes mirrored by the C ABI (see include/latcheck.h).
enum class status {
    ok = 0,
    parse_error = 1,
    semantic_error = 2,
    order_cap_exceeded = 3,
    lattice_cap_exceeded = 4,
    invalid_argument = 5,
    io_error = 6,
    internal_error = 7,
};

class error : public std::runtime_error {
public:
    error(status st, const std::string& what) : std::runtime_error(what), st_(st) {}
    status code() const { return st_; }

private:
    status st_;
};

inline error parse_error(const std::string& what) { return error(status::parse_error, what); }
inline error semantic_error(const std::string& what) { return error(status::semantic_error, what); }
inline error order_cap_error(const std::string& what) { return error(status::order_cap_exceeded, what); }
inline error lattice_cap_error(const std::string& what) { return error(status::lattice_cap_exceeded, what); }
inline error invalid_argument_error(const std::string& what) { return error(status::invalid_argument, what); }
inline error io_error(const std::string& what) { return error(status::io_error, what); }
inline error internal_error(const std::string& what) { return error(status::internal_error, what); }

inline const char* status_name(status st) {
    switch (st) {
        case status::ok: return "ok";
        case status::parse_error: return "parse-error";
        case status::semantic_error: return "semantic-error";
        case status::order_cap_exceeded: return "order-cap-exceeded";
        case status::lattice_cap_exceeded: return "lattice-cap-exceeded";
        case status::invalid_argument: return "invalid-argument";
        case status::io_error: return "io-error";
        case status::internal_error: return "internal-error";
    }
    return "unknown";
}

}  // namespace latcheck
