#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibgray {

using Symbol = std::int32_t;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// A fixed-length string over the alphabet {0, ..., q-1}. The empty string
/// (length 0) is a valid value. Immutable after construction.
class QaryString {
public:
    QaryString() : q_(2) {}
    QaryString(std::vector<Symbol> symbols, Symbol q);

    static QaryString zeros(std::size_t n, Symbol q);
    /// Parse "0200" style text, one base-10 digit per symbol (q <= 10).
    static QaryString from_digits(std::string_view text, Symbol q);

    Symbol q() const { return q_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const { return symbols_; }

    friend bool operator==(const QaryString&, const QaryString&) = default;
    friend auto operator<=>(const QaryString&, const QaryString&) = default;

private:
    std::vector<Symbol> symbols_;
    Symbol q_;
};

/// An ordered list of equal-length strings over a common alphabet. Storage is
/// one flat symbol buffer; entries are exposed as views into it.
class CodeList {
public:
    CodeList(Symbol q, std::size_t length);

    /// The one-entry list containing only the empty string.
    static CodeList lambda_list(Symbol q);

    Symbol q() const { return q_; }
    std::size_t length() const { return n_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    std::span<const Symbol> operator[](std::size_t i) const {
        return {data_.data() + i * n_, n_};
    }
    QaryString entry(std::size_t i) const;
    QaryString first() const;
    QaryString last() const;

    void push_back(std::span<const Symbol> entry);
    void push_back(const QaryString& entry);
    void reserve(std::size_t entries);

    friend bool operator==(const CodeList&, const CodeList&) = default;

    class const_iterator {
    public:
        const_iterator(const CodeList* list, std::size_t i) : list_(list), i_(i) {}
        std::span<const Symbol> operator*() const { return (*list_)[i_]; }
        const_iterator& operator++() { ++i_; return *this; }
        bool operator!=(const const_iterator& o) const { return i_ != o.i_; }

    private:
        const CodeList* list_;
        std::size_t i_;
    };
    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, count_}; }

private:
    std::vector<Symbol> data_;
    std::size_t n_;
    std::size_t count_ = 0;
    Symbol q_;
};

/// Number of positions at which two equal-length strings differ.
std::size_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b);
std::size_t hamming_distance(const QaryString& a, const QaryString& b);

/// The list covered in reverse order: first(reverse_list(L)) == last(L).
CodeList reverse_list(const CodeList& list);

/// Prepend u to every entry. Adjacent Hamming distances are unchanged.
CodeList prepend(const QaryString& u, const CodeList& list);

/// Entries of a followed by entries of b; both must share q and length.
CodeList concat(const CodeList& a, const CodeList& b);

/// The binary string marking nonzero positions: result[i] = 0 iff s[i] = 0.
QaryString trace(const QaryString& s);
std::vector<Symbol> trace_symbols(std::span<const Symbol> s);

/// Transpose symbols 0 and i positionwise; a self-inverse relabeling that
/// preserves Hamming distances.
QaryString relabel_swap(const QaryString& s, Symbol i);
CodeList relabel_swap(const CodeList& list, Symbol i);

std::string format_digits(std::span<const Symbol> s);
std::string format_csv(std::span<const Symbol> s);

std::ostream& operator<<(std::ostream& os, const QaryString& s);
std::ostream& operator<<(std::ostream& os, const CodeList& list);

} // namespace fibgray
