#pragma once

#include <array>
#include <string>
#include <string_view>

namespace pfx {

/// Ordered set of distinct single-character input symbols.
///
/// Symbols are addressed by index everywhere else in the library; the
/// character names only matter for I/O and for building strings.  The
/// canonical symbol order is a, b, c, d, g, h (the six-letter order used by
/// the cyclic-shift witnesses).
class Alphabet {
public:
    static constexpr int kMaxSymbols = 16;

    Alphabet() = default;
    explicit Alphabet(std::string_view symbols);

    /// The first k canonical symbols ("a", "ab", "abc", "abcd", "abcdg", "abcdgh").
    static Alphabet first(int k);

    int size() const { return static_cast<int>(symbols_.size()); }
    char symbol(int index) const { return symbols_[static_cast<size_t>(index)]; }
    const std::string& symbols() const { return symbols_; }

    /// Index of a symbol character, or -1 when the character is not present.
    int index(char c) const { return lookup_[static_cast<unsigned char>(c)]; }

    /// Index of a symbol character; throws RejectedInput for foreign characters.
    int index_checked(char c) const;

    bool contains(char c) const { return index(c) >= 0; }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    std::string symbols_;
    std::array<signed char, 256> lookup_{};
};

} // namespace pfx
