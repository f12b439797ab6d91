#include "gisemi/polycyclic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "gisemi/errors.hpp"

namespace gisemi {

  namespace {
    bool is_prefix(Word const& p, Word const& q) {
      return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
    }

    Word join(Word const& a, Word const& b, std::size_t skip) {
      Word out;
      out.reserve(a.size() + b.size() - skip);
      out.insert(out.end(), a.begin(), a.end());
      out.insert(out.end(), b.begin() + skip, b.end());
      return out;
    }

    PolyElement from_normal_shape(std::span<PolyLetter const> letters) {
      Word x, y;
      for (auto const& l : letters) {
        (l.inverse ? y : x).push_back(l.index);
      }
      std::reverse(y.begin(), y.end());
      return PolyElement::make(std::move(x), std::move(y));
    }
  }  // namespace

  void check_arity(Arity arity, PolyElement const& x) {
    if (x.is_zero()) {
      return;
    }
    for (auto const* w : {&x.x(), &x.y()}) {
      for (auto i : *w) {
        if (!arity.admits(i)) {
          throw InputError("generator index " + std::to_string(i) + " out of range for arity "
                           + arity.to_string());
        }
      }
    }
  }

  void check_arity(Arity arity, std::span<PolyLetter const> letters) {
    for (auto const& l : letters) {
      if (!arity.admits(l.index)) {
        throw InputError("generator index " + std::to_string(l.index) + " out of range for arity "
                         + arity.to_string());
      }
    }
  }

  PolyElement poly_multiply(PolyElement const& lhs, PolyElement const& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
      return PolyElement::zero();
    }
    if (is_prefix(lhs.y(), rhs.x())) {
      return PolyElement::make(join(lhs.x(), rhs.x(), lhs.y().size()), rhs.y());
    }
    if (is_prefix(rhs.x(), lhs.y())) {
      return PolyElement::make(lhs.x(), join(rhs.y(), lhs.y(), rhs.x().size()));
    }
    return PolyElement::zero();
  }

  PolyElement poly_multiply(Arity arity, PolyElement const& lhs, PolyElement const& rhs) {
    check_arity(arity, lhs);
    check_arity(arity, rhs);
    return poly_multiply(lhs, rhs);
  }

  PolyElement poly_invert(PolyElement const& x) {
    return x.is_zero() ? x : PolyElement::make(x.y(), x.x());
  }

  PolyElement poly_reduce(Arity arity, std::span<PolyLetter const> letters) {
    check_arity(arity, letters);
    // Invariant: stack has the shape (positives)(negatives).
    std::vector<PolyLetter> stack;
    stack.reserve(letters.size());
    for (auto const& l : letters) {
      if (!l.inverse && !stack.empty() && stack.back().inverse) {
        if (stack.back().index != l.index) {
          return PolyElement::zero();
        }
        stack.pop_back();
        continue;
      }
      stack.push_back(l);
    }
    return from_normal_shape(stack);
  }

  PolyElement poly_reduce_by_rewriting(Arity                       arity,
                                       std::span<PolyLetter const> letters,
                                       RewriteStrategy             strategy) {
    check_arity(arity, letters);
    std::vector<PolyLetter> w(letters.begin(), letters.end());
    auto redex_at = [&w](std::size_t k) { return w[k].inverse && !w[k + 1].inverse; };
    while (w.size() >= 2) {
      std::optional<std::size_t> found;
      if (strategy == RewriteStrategy::leftmost) {
        for (std::size_t k = 0; k + 1 < w.size() && !found; ++k) {
          if (redex_at(k)) {
            found = k;
          }
        }
      } else {
        for (std::size_t k = w.size() - 1; k-- > 0 && !found;) {
          if (redex_at(k)) {
            found = k;
          }
        }
      }
      if (!found) {
        break;
      }
      if (w[*found].index != w[*found + 1].index) {
        return PolyElement::zero();
      }
      w.erase(w.begin() + *found, w.begin() + *found + 2);
    }
    return from_normal_shape(w);
  }

  std::vector<PolyLetter> letters_of(PolyElement const& x) {
    std::vector<PolyLetter> out;
    for (auto i : x.x()) {
      out.push_back({i, false});
    }
    for (auto it = x.y().rbegin(); it != x.y().rend(); ++it) {
      out.push_back({*it, true});
    }
    return out;
  }

  Word prefix_code_word(std::uint32_t i) {
    Word w(i, 1);
    w.push_back(0);
    return w;
  }

  PolyElement embed_omega_into_p2(PolyElement const& x) {
    if (x.is_zero()) {
      return x;
    }
    auto encode = [](Word const& w) {
      Word out;
      for (auto i : w) {
        auto q = prefix_code_word(i);
        out.insert(out.end(), q.begin(), q.end());
      }
      return out;
    };
    return PolyElement::make(encode(x.x()), encode(x.y()));
  }

  std::optional<std::size_t> min_word_length(PolyElement const& x) {
    if (x.is_zero()) {
      return std::nullopt;
    }
    return std::min(x.x().size(), x.y().size());
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string format_word(Word const& w) {
      std::string out = "[";
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (k != 0) {
          out += ' ';
        }
        out += std::to_string(w[k]);
      }
      return out + "]";
    }

    class Cursor {
     public:
      explicit Cursor(std::string_view text) : _text(text) {}

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, 1, _pos + 1);
      }
      bool done() const {
        return _pos == _text.size();
      }
      char peek() const {
        return done() ? '\0' : _text[_pos];
      }
      void expect(std::string_view s) {
        if (_text.substr(_pos, s.size()) != s) {
          fail("expected '" + std::string(s) + "'");
        }
        _pos += s.size();
      }
      void skip_spaces() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
      }
      std::uint32_t number() {
        std::uint32_t value = 0;
        auto [ptr, ec] = std::from_chars(_text.data() + _pos, _text.data() + _text.size(), value);
        if (ec != std::errc() || ptr == _text.data() + _pos) {
          fail("expected a generator index");
        }
        _pos = static_cast<std::size_t>(ptr - _text.data());
        return value;
      }
      Word word() {
        expect("[");
        Word w;
        skip_spaces();
        while (peek() != ']') {
          w.push_back(number());
          skip_spaces();
        }
        expect("]");
        return w;
      }
      void advance(std::size_t n) {
        _pos += n;
      }

     private:
      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  std::string format_poly(PolyElement const& x) {
    if (x.is_zero()) {
      return "0";
    }
    return format_word(x.x()) + format_word(x.y()) + "^-1";
  }

  PolyElement parse_poly(std::string_view text) {
    Cursor c(text);
    c.skip_spaces();
    if (c.peek() == '0') {
      c.advance(1);
      c.skip_spaces();
      if (!c.done()) {
        c.fail("trailing characters");
      }
      return PolyElement::zero();
    }
    Word x = c.word();
    Word y = c.word();
    c.expect("^-1");
    c.skip_spaces();
    if (!c.done()) {
      c.fail("trailing characters");
    }
    return PolyElement::make(std::move(x), std::move(y));
  }

  std::string format_letters(std::span<PolyLetter const> letters) {
    std::string out;
    for (auto const& l : letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += 'p' + std::to_string(l.index) + (l.inverse ? "^-1" : "");
    }
    return out;
  }

  std::vector<PolyLetter> parse_letters(std::string_view text) {
    Cursor                  c(text);
    std::vector<PolyLetter> out;
    c.skip_spaces();
    while (!c.done()) {
      c.expect("p");
      PolyLetter l{c.number(), false};
      if (c.peek() == '^') {
        c.expect("^-1");
        l.inverse = true;
      }
      if (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek()))) {
        c.fail("expected whitespace between letters");
      }
      out.push_back(l);
      c.skip_spaces();
    }
    return out;
  }

}  // namespace gisemi
