// Free-group words, presentations and the coset-table column layout.

#ifndef COSEN_WORDS_HPP_
#define COSEN_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cosen {

  // 1-based index into Presentation::generator_names.
  using GeneratorId = std::uint32_t;

  // 0-based coset table column.
  using Column = std::uint32_t;

  // A generator or its inverse, stored as a signed small integer
  // (+g for the generator, -g for its inverse).
  class Letter {
   public:
    constexpr Letter() = default;
    constexpr Letter(GeneratorId gen, bool inverse)
        : _value(inverse ? -static_cast<std::int32_t>(gen)
                         : static_cast<std::int32_t>(gen)) {}

    static constexpr Letter from_value(std::int32_t v) {
      Letter l;
      l._value = v;
      return l;
    }

    constexpr GeneratorId gen() const {
      return static_cast<GeneratorId>(_value < 0 ? -_value : _value);
    }
    constexpr bool          inverse() const { return _value < 0; }
    constexpr std::int32_t  value() const { return _value; }
    constexpr Letter        inverted() const { return from_value(-_value); }

    constexpr bool operator==(Letter const&) const  = default;
    constexpr auto operator<=>(Letter const&) const = default;

   private:
    std::int32_t _value = 0;
  };

  using Word = std::vector<Letter>;

  Word free_reduce(std::span<Letter const> w);
  Word cyclically_reduce(std::span<Letter const> w);
  Word invert(std::span<Letter const> w);
  Word concat(std::span<Letter const> u, std::span<Letter const> v);

  // Parsed word expression before flattening.
  struct Expr {
    enum class Kind { generator, product, power, conjugate, commutator };

    Kind              kind     = Kind::product;
    Letter            letter   = {};  // kind == generator
    int               exponent = 1;   // kind == power
    std::vector<Expr> children = {};

    static Expr gen(GeneratorId g) {
      return Expr{Kind::generator, Letter(g, false), 1, {}};
    }
    static Expr product(std::vector<Expr> terms) {
      return Expr{Kind::product, {}, 1, std::move(terms)};
    }
    static Expr power(Expr base, int n) {
      return Expr{Kind::power, {}, n, {std::move(base)}};
    }
    // u^v = v^-1 u v
    static Expr conjugate(Expr u, Expr v) {
      return Expr{Kind::conjugate, {}, 1, {std::move(u), std::move(v)}};
    }
    // [u, v] = u^-1 v^-1 u v
    static Expr commutator(Expr u, Expr v) {
      return Expr{Kind::commutator, {}, 1, {std::move(u), std::move(v)}};
    }
  };

  // Flattens an expression into letters. No free reduction is applied.
  Word expand_word(Expr const& e);

  struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word>        relators;       // cyclically reduced, nonempty
    std::vector<Word>        subgroup_gens;  // freely reduced
    std::vector<GeneratorId> involutions;    // sorted ascending

    std::size_t generator_count() const noexcept {
      return generator_names.size();
    }
    bool is_involution(GeneratorId g) const noexcept;

    bool operator==(Presentation const&) const = default;
  };

  // Generators with a literal g^2 or g^-2 relator, sorted ascending.
  std::vector<GeneratorId> detect_involutions(std::vector<Word> const& relators);

  bool is_involution_relator(std::span<Letter const> w) noexcept;

  // Columns are ordered generator-major: forward column, then the inverse
  // column unless the generator is an involution, giving 2g - i columns.
  class ColumnLayout {
   public:
    ColumnLayout() = default;
    ColumnLayout(std::size_t generators, std::span<GeneratorId const> involutions);

    std::size_t columns() const noexcept { return _letters.size(); }
    std::size_t generators() const noexcept { return _forward.size() - 1; }

    Column forward(GeneratorId g) const noexcept { return _forward[g]; }
    Column inverse(GeneratorId g) const noexcept { return _inverse[g]; }
    bool   is_involution(GeneratorId g) const noexcept {
      return _forward[g] == _inverse[g];
    }

    Column column_of(Letter l) const noexcept {
      return l.inverse() ? _inverse[l.gen()] : _forward[l.gen()];
    }
    Column inverse_column(Column c) const noexcept { return _inverse_col[c]; }
    Letter letter_of(Column c) const noexcept { return _letters[c]; }

    std::vector<Column> columns_of(std::span<Letter const> w) const;

    bool operator==(ColumnLayout const&) const = default;

   private:
    std::vector<Column> _forward;  // indexed by GeneratorId, slot 0 unused
    std::vector<Column> _inverse;
    std::vector<Column> _inverse_col;
    std::vector<Letter> _letters;
  };

  ColumnLayout column_layout(std::size_t                  generators,
                             std::span<GeneratorId const> involutions);

  std::string render_word(std::span<Letter const>         w,
                          std::vector<std::string> const& names);
  std::string render_presentation(Presentation const& p);

}  // namespace cosen

#endif  // COSEN_WORDS_HPP_
