#include "triesmooth/alphabet.hpp"

#include <stdexcept>

namespace triesmooth {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 2) {
        throw std::invalid_argument("alphabet needs at least two symbols");
    }
    if (names_.size() > 256) {
        throw std::invalid_argument("alphabet larger than 256 symbols is not supported");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) {
            throw std::invalid_argument("empty symbol name");
        }
        auto [it, inserted] = index_.emplace(names_[i], static_cast<Symbol>(i));
        if (!inserted) {
            throw std::invalid_argument("duplicate symbol name: " + names_[i]);
        }
    }
}

std::optional<Symbol> Alphabet::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

}  // namespace triesmooth
