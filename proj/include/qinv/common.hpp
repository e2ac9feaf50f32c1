#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qinv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (quiver/representation/certificate files).
struct ParseError : Error {
    explicit ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_number(line) {}
    int line_number;
};

// A documented operation precondition does not hold for the given arguments.
struct PreconditionError : Error {
    using Error::Error;
};

// SplitMix64. Used to derive per-task seeds deterministically; all randomized
// operations in the library are reproducible from their explicit seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0xd1b54a32d192ed03ULL) {
        // warm up so that small seeds do not produce small first outputs
        splitmix64(state_);
        splitmix64(state_);
    }

    std::uint64_t next() { return splitmix64(state_); }

    // uniform in [lo, hi]; modulo bias is irrelevant at the ranges used here
    long long uniform(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

private:
    std::uint64_t state_;
};

// Deterministic seed derivation from a master seed and a list of tags
// (weight entries, multiple, trial index, ...).
inline std::uint64_t derive_seed(std::uint64_t master, const std::vector<long long>& tags) {
    std::uint64_t s = master + 0x100000001b3ULL;
    splitmix64(s);
    for (long long t : tags) {
        s ^= static_cast<std::uint64_t>(t) + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
        splitmix64(s);
    }
    return splitmix64(s);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline long long parse_ll(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + s + "'");
    }
    if (pos != s.size()) throw ParseError("expected integer, got '" + s + "'");
    return v;
}

// Comma-separated integer vector, e.g. "1,-1".
inline std::vector<long long> parse_int_vector(const std::string& s) {
    std::vector<long long> out;
    for (const auto& piece : split_on(s, ',')) out.push_back(parse_ll(piece));
    return out;
}

inline std::string format_int_vector(const std::vector<long long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace qinv
