#include "triesmooth/string_spec.hpp"

#include <stdexcept>

namespace triesmooth {

StringSpec::StringSpec(std::vector<Symbol> prefix, std::vector<Symbol> period,
                       std::uint32_t alphabet_size)
    : prefix_(std::move(prefix)), period_(std::move(period)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ < 2) {
        throw std::invalid_argument("string spec needs an alphabet of size >= 2");
    }
    for (Symbol s : prefix_) {
        if (s >= alphabet_size_) {
            throw std::invalid_argument("prefix symbol index out of alphabet range");
        }
    }
    for (Symbol s : period_) {
        if (s >= alphabet_size_) {
            throw std::invalid_argument("period symbol index out of alphabet range");
        }
    }
}

StringSpec StringSpec::finite(std::vector<Symbol> prefix, std::uint32_t alphabet_size) {
    return StringSpec(std::move(prefix), {}, alphabet_size);
}

StringSpec StringSpec::periodic(std::vector<Symbol> prefix, std::vector<Symbol> period,
                                std::uint32_t alphabet_size) {
    if (period.empty()) {
        throw std::invalid_argument("period must be nonempty");
    }
    return StringSpec(std::move(prefix), std::move(period), alphabet_size);
}

std::uint64_t StringSpec::finite_length() const {
    if (is_infinite()) {
        throw std::logic_error("finite_length of an infinite string");
    }
    return prefix_.size();
}

Symbol StringSpec::symbol_at(std::uint64_t i) const {
    if (i == 0) {
        throw std::out_of_range("string positions are 1-based");
    }
    if (i <= prefix_.size()) {
        return prefix_[i - 1];
    }
    if (period_.empty()) {
        throw std::out_of_range("position beyond the end of a finite string");
    }
    return period_[(i - prefix_.size() - 1) % period_.size()];
}

std::vector<Symbol> StringSpec::materialize(std::uint64_t count) const {
    if (!is_infinite() && count > prefix_.size()) {
        count = prefix_.size();
    }
    std::vector<Symbol> out;
    out.reserve(count);
    for (std::uint64_t i = 1; i <= count; ++i) {
        out.push_back(symbol_at(i));
    }
    return out;
}

LcpResult lcp(const StringSpec& s, const StringSpec& t, std::uint64_t cap) {
    if (s.alphabet_size() != t.alphabet_size()) {
        throw std::invalid_argument("lcp of strings over different alphabets");
    }
    if (cap == 0) {
        throw std::invalid_argument("lcp cap must be positive");
    }
    std::uint64_t k = 0;
    for (std::uint64_t i = 1; i <= cap; ++i) {
        if (!s.has_position(i) || !t.has_position(i) || s.symbol_at(i) != t.symbol_at(i)) {
            break;
        }
        k = i;
    }
    return {k, k == cap, cap};
}

}  // namespace triesmooth
