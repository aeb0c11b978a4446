#include "pfx/alphabet.hpp"

#include "pfx/errors.hpp"

namespace pfx {

namespace {
constexpr std::string_view kCanonicalOrder = "abcdgh";
}

Alphabet::Alphabet(std::string_view symbols) {
    if (symbols.empty())
        throw RejectedInput("alphabet: must contain at least one symbol");
    if (static_cast<int>(symbols.size()) > kMaxSymbols)
        throw RejectedInput("alphabet: at most " + std::to_string(kMaxSymbols) + " symbols supported");
    lookup_.fill(-1);
    symbols_.reserve(symbols.size());
    for (char c : symbols) {
        if (lookup_[static_cast<unsigned char>(c)] >= 0)
            throw RejectedInput(std::string("alphabet: duplicate symbol '") + c + "'");
        lookup_[static_cast<unsigned char>(c)] = static_cast<signed char>(symbols_.size());
        symbols_.push_back(c);
    }
}

Alphabet Alphabet::first(int k) {
    if (k < 1 || k > static_cast<int>(kCanonicalOrder.size()))
        throw RejectedInput("alphabet: canonical order defines 1..6 symbols, got " + std::to_string(k));
    return Alphabet(kCanonicalOrder.substr(0, static_cast<size_t>(k)));
}

int Alphabet::index_checked(char c) const {
    int i = index(c);
    if (i < 0)
        throw RejectedInput(std::string("symbol '") + c + "' is not in alphabet \"" + symbols_ + "\"");
    return i;
}

} // namespace pfx
