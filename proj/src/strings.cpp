#include "fibgray/strings.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace fibgray {

namespace {

void check_alphabet(Symbol q) {
    if (q < 2) throw std::invalid_argument("alphabet size q must be at least 2");
}

void check_symbols(std::span<const Symbol> symbols, Symbol q) {
    for (Symbol s : symbols) {
        if (s < 0 || s >= q)
            throw std::invalid_argument("symbol out of range for alphabet of size " +
                                        std::to_string(q));
    }
}

} // namespace

QaryString::QaryString(std::vector<Symbol> symbols, Symbol q)
    : symbols_(std::move(symbols)), q_(q) {
    check_alphabet(q);
    check_symbols(symbols_, q);
}

QaryString QaryString::zeros(std::size_t n, Symbol q) {
    return QaryString(std::vector<Symbol>(n, 0), q);
}

QaryString QaryString::from_digits(std::string_view text, Symbol q) {
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("non-digit character in string literal");
        symbols.push_back(c - '0');
    }
    return QaryString(std::move(symbols), q);
}

CodeList::CodeList(Symbol q, std::size_t length) : n_(length), q_(q) {
    check_alphabet(q);
}

CodeList CodeList::lambda_list(Symbol q) {
    CodeList list(q, 0);
    list.push_back(std::span<const Symbol>{});
    return list;
}

QaryString CodeList::entry(std::size_t i) const {
    auto view = (*this)[i];
    return QaryString(std::vector<Symbol>(view.begin(), view.end()), q_);
}

QaryString CodeList::first() const {
    if (empty()) throw std::out_of_range("first() of an empty list");
    return entry(0);
}

QaryString CodeList::last() const {
    if (empty()) throw std::out_of_range("last() of an empty list");
    return entry(count_ - 1);
}

void CodeList::push_back(std::span<const Symbol> entry) {
    if (entry.size() != n_)
        throw std::invalid_argument("entry length " + std::to_string(entry.size()) +
                                    " does not match list length " + std::to_string(n_));
    check_symbols(entry, q_);
    data_.insert(data_.end(), entry.begin(), entry.end());
    ++count_;
}

void CodeList::push_back(const QaryString& entry) {
    push_back(entry.symbols());
}

void CodeList::reserve(std::size_t entries) {
    data_.reserve(entries * n_);
}

std::size_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

std::size_t hamming_distance(const QaryString& a, const QaryString& b) {
    return hamming_distance(a.symbols(), b.symbols());
}

CodeList reverse_list(const CodeList& list) {
    CodeList out(list.q(), list.length());
    out.reserve(list.size());
    for (std::size_t i = list.size(); i > 0; --i) out.push_back(list[i - 1]);
    return out;
}

CodeList prepend(const QaryString& u, const CodeList& list) {
    check_symbols(u.symbols(), list.q());
    CodeList out(list.q(), u.size() + list.length());
    out.reserve(list.size());
    std::vector<Symbol> buf(u.symbols().begin(), u.symbols().end());
    buf.resize(u.size() + list.length());
    for (auto entry : list) {
        std::copy(entry.begin(), entry.end(), buf.begin() + static_cast<std::ptrdiff_t>(u.size()));
        out.push_back(buf);
    }
    return out;
}

CodeList concat(const CodeList& a, const CodeList& b) {
    if (a.q() != b.q())
        throw std::invalid_argument("concat: alphabet mismatch");
    if (a.length() != b.length())
        throw std::invalid_argument("concat: string length mismatch");
    CodeList out(a.q(), a.length());
    out.reserve(a.size() + b.size());
    for (auto entry : a) out.push_back(entry);
    for (auto entry : b) out.push_back(entry);
    return out;
}

std::vector<Symbol> trace_symbols(std::span<const Symbol> s) {
    std::vector<Symbol> t(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) t[i] = s[i] == 0 ? 0 : 1;
    return t;
}

QaryString trace(const QaryString& s) {
    return QaryString(trace_symbols(s.symbols()), 2);
}

QaryString relabel_swap(const QaryString& s, Symbol i) {
    if (i < 0 || i >= s.q())
        throw std::invalid_argument("relabel_swap: symbol out of alphabet");
    std::vector<Symbol> out(s.symbols().begin(), s.symbols().end());
    for (Symbol& x : out) {
        if (x == 0) x = i;
        else if (x == i) x = 0;
    }
    return QaryString(std::move(out), s.q());
}

CodeList relabel_swap(const CodeList& list, Symbol i) {
    if (i < 0 || i >= list.q())
        throw std::invalid_argument("relabel_swap: symbol out of alphabet");
    CodeList out(list.q(), list.length());
    out.reserve(list.size());
    std::vector<Symbol> buf(list.length());
    for (auto entry : list) {
        for (std::size_t p = 0; p < entry.size(); ++p) {
            Symbol x = entry[p];
            buf[p] = x == 0 ? i : (x == i ? 0 : x);
        }
        out.push_back(buf);
    }
    return out;
}

std::string format_digits(std::span<const Symbol> s) {
    std::string out;
    out.reserve(s.size());
    for (Symbol x : s) {
        if (x < 0 || x > 9)
            throw std::invalid_argument("format_digits: symbol above 9, use csv");
        out.push_back(static_cast<char>('0' + x));
    }
    return out;
}

std::string format_csv(std::span<const Symbol> s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(s[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const QaryString& s) {
    if (s.empty()) return os << "(lambda)";
    return os << (s.q() <= 10 ? format_digits(s.symbols()) : format_csv(s.symbols()));
}

std::ostream& operator<<(std::ostream& os, const CodeList& list) {
    os << '(';
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) os << ',';
        os << list.entry(i);
    }
    return os << ')';
}

} // namespace fibgray
