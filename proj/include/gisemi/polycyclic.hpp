#ifndef GISEMI_POLYCYCLIC_HPP_
#define GISEMI_POLYCYCLIC_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gisemi {

  // Sequence of generator indices; the word [i, j] stands for p_i p_j.
  using Word = std::vector<std::uint32_t>;

  // Number of generators of P_lambda. Unbounded arity accepts every index.
  class Arity {
   public:
    static Arity finite(std::size_t n) {
      return Arity(n);
    }
    static Arity unbounded() {
      return Arity(std::nullopt);
    }

    bool admits(std::uint32_t index) const noexcept {
      return !_n || index < *_n;
    }
    std::optional<std::size_t> size() const noexcept {
      return _n;
    }
    std::string to_string() const {
      return _n ? std::to_string(*_n) : std::string("omega");
    }

   private:
    explicit Arity(std::optional<std::size_t> n) : _n(n) {}
    std::optional<std::size_t> _n;
  };

  // Zero, or xy^-1 in normal form; 1 is the pair of empty words.
  class PolyElement {
   public:
    PolyElement() = default;  // zero

    static PolyElement zero() {
      return PolyElement();
    }
    static PolyElement identity() {
      return PolyElement(Word{}, Word{});
    }
    static PolyElement make(Word x, Word y) {
      return PolyElement(std::move(x), std::move(y));
    }

    bool is_zero() const noexcept {
      return !_pair.has_value();
    }
    bool is_identity() const noexcept {
      return _pair && _pair->first.empty() && _pair->second.empty();
    }
    // Precondition: !is_zero().
    Word const& x() const {
      return _pair->first;
    }
    Word const& y() const {
      return _pair->second;
    }

    friend bool operator==(PolyElement const&, PolyElement const&)  = default;
    friend auto operator<=>(PolyElement const&, PolyElement const&) = default;

   private:
    PolyElement(Word x, Word y) : _pair(std::in_place, std::move(x), std::move(y)) {}

    std::optional<std::pair<Word, Word>> _pair;
  };

  // p_i, or p_i^-1 when inverse is set.
  struct PolyLetter {
    std::uint32_t index   = 0;
    bool          inverse = false;

    friend bool operator==(PolyLetter const&, PolyLetter const&) = default;
  };

  // Throws InputError if some index is not admitted by the arity.
  void check_arity(Arity arity, PolyElement const& x);
  void check_arity(Arity arity, std::span<PolyLetter const> letters);

  // xy^-1 . zw^-1 is (x z1) w^-1 if z = y z1, x (w y1)^-1 if y = z y1, and
  // zero otherwise.
  PolyElement poly_multiply(PolyElement const& lhs, PolyElement const& rhs);
  PolyElement poly_multiply(Arity arity, PolyElement const& lhs, PolyElement const& rhs);

  PolyElement poly_invert(PolyElement const& x);

  // Reduces a letter sequence with p_i^-1 p_i -> 1 and p_j^-1 p_i -> 0
  // (i != j) until it has the shape (positives)(negatives). The empty
  // sequence reduces to 1. Runs in a single left-to-right stack pass.
  PolyElement poly_reduce(Arity arity, std::span<PolyLetter const> letters);

  enum class RewriteStrategy { leftmost, rightmost };

  // Same result as poly_reduce, computed by literal one-step rewriting of the
  // leftmost or rightmost (p_i^-1, p_j) pair. Quadratic; for cross-checks.
  PolyElement poly_reduce_by_rewriting(Arity                       arity,
                                       std::span<PolyLetter const> letters,
                                       RewriteStrategy             strategy);

  // The letters x_1 ... x_n y_m^-1 ... y_1^-1 spelling xy^-1; empty for 1.
  // Precondition: !x.is_zero().
  std::vector<PolyLetter> letters_of(PolyElement const& x);

  // q_i = p_1^i p_0; {q_i} is a prefix code over {0, 1}.
  Word prefix_code_word(std::uint32_t i);

  // P_omega -> P_2 substituting q_i for p_i on both sides.
  PolyElement embed_omega_into_p2(PolyElement const& x);

  // min(|x|, |y|), or nullopt for zero (zero lies in every neighbourhood).
  std::optional<std::size_t> min_word_length(PolyElement const& x);

  // Canonical text: "0", or "[i j ...][k l ...]^-1".
  std::string format_poly(PolyElement const& x);
  PolyElement parse_poly(std::string_view text);

  // Letter words: whitespace separated "pN" or "pN^-1" tokens.
  std::string             format_letters(std::span<PolyLetter const> letters);
  std::vector<PolyLetter> parse_letters(std::string_view text);

}  // namespace gisemi

#endif  // GISEMI_POLYCYCLIC_HPP_
