#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace triesmooth {

/// Dense symbol index into an alphabet.
using Symbol = std::uint8_t;

/// Finite ordered alphabet of at least two symbols. All arithmetic layers work
/// on dense indices 0..r-1; the surface names stored here are touched only
/// when parsing and printing.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
    const std::string& name(Symbol s) const { return names_.at(s); }
    std::optional<Symbol> index_of(std::string_view name) const;

    static Alphabet binary();  // {"0", "1"}

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> index_;
};

}  // namespace triesmooth
