#include "cosen/words.hpp"

#include <algorithm>
#include <sstream>

namespace cosen {

  Word free_reduce(std::span<Letter const> w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
      if (!out.empty() && out.back() == l.inverted()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  Word cyclically_reduce(std::span<Letter const> w) {
    Word        r     = free_reduce(w);
    std::size_t first = 0;
    std::size_t last  = r.size();
    while (last - first >= 2 && r[first] == r[last - 1].inverted()) {
      ++first;
      --last;
    }
    return Word(r.begin() + first, r.begin() + last);
  }

  Word invert(std::span<Letter const> w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->inverted());
    }
    return out;
  }

  Word concat(std::span<Letter const> u, std::span<Letter const> v) {
    Word out(u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  Word expand_word(Expr const& e) {
    switch (e.kind) {
      case Expr::Kind::generator:
        return Word{e.letter};
      case Expr::Kind::product: {
        Word out;
        for (auto const& c : e.children) {
          Word part = expand_word(c);
          out.insert(out.end(), part.begin(), part.end());
        }
        return out;
      }
      case Expr::Kind::power: {
        Word base = expand_word(e.children[0]);
        if (e.exponent < 0) {
          base = invert(base);
        }
        int  n = e.exponent < 0 ? -e.exponent : e.exponent;
        Word out;
        out.reserve(base.size() * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
          out.insert(out.end(), base.begin(), base.end());
        }
        return out;
      }
      case Expr::Kind::conjugate: {
        Word u = expand_word(e.children[0]);
        Word v = expand_word(e.children[1]);
        return concat(concat(invert(v), u), v);
      }
      case Expr::Kind::commutator: {
        Word u = expand_word(e.children[0]);
        Word v = expand_word(e.children[1]);
        return concat(concat(invert(u), invert(v)), concat(u, v));
      }
    }
    return {};
  }

  bool Presentation::is_involution(GeneratorId g) const noexcept {
    return std::binary_search(involutions.begin(), involutions.end(), g);
  }

  bool is_involution_relator(std::span<Letter const> w) noexcept {
    return w.size() == 2 && w[0] == w[1];
  }

  std::vector<GeneratorId> detect_involutions(std::vector<Word> const& relators) {
    std::vector<GeneratorId> out;
    for (auto const& r : relators) {
      if (is_involution_relator(r)) {
        out.push_back(r[0].gen());
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ColumnLayout::ColumnLayout(std::size_t                  generators,
                             std::span<GeneratorId const> involutions)
      : _forward(generators + 1, 0), _inverse(generators + 1, 0) {
    std::vector<bool> invol(generators + 1, false);
    for (GeneratorId g : involutions) {
      invol.at(g) = true;
    }
    for (GeneratorId g = 1; g <= generators; ++g) {
      _forward[g] = static_cast<Column>(_letters.size());
      _letters.emplace_back(g, false);
      if (invol[g]) {
        _inverse[g] = _forward[g];
      } else {
        _inverse[g] = static_cast<Column>(_letters.size());
        _letters.emplace_back(g, true);
      }
    }
    _inverse_col.resize(_letters.size());
    for (GeneratorId g = 1; g <= generators; ++g) {
      _inverse_col[_forward[g]] = _inverse[g];
      _inverse_col[_inverse[g]] = _forward[g];
    }
  }

  std::vector<Column> ColumnLayout::columns_of(std::span<Letter const> w) const {
    std::vector<Column> out;
    out.reserve(w.size());
    for (Letter l : w) {
      out.push_back(column_of(l));
    }
    return out;
  }

  ColumnLayout column_layout(std::size_t                  generators,
                             std::span<GeneratorId const> involutions) {
    return ColumnLayout(generators, involutions);
  }

  std::string render_word(std::span<Letter const>         w,
                          std::vector<std::string> const& names) {
    std::ostringstream os;
    std::size_t        i = 0;
    bool               first = true;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      int n = static_cast<int>(j - i) * (w[i].inverse() ? -1 : 1);
      if (!first) {
        os << '*';
      }
      first = false;
      os << names[w[i].gen() - 1];
      if (n != 1) {
        os << '^' << n;
      }
      i = j;
    }
    return os.str();
  }

  std::string render_presentation(Presentation const& p) {
    std::ostringstream os;
    os << "generators: ";
    for (std::size_t i = 0; i < p.generator_names.size(); ++i) {
      os << (i ? ", " : "") << p.generator_names[i];
    }
    os << "\nrelators: ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      os << (i ? ", " : "") << render_word(p.relators[i], p.generator_names);
    }
    os << "\nsubgroup: ";
    for (std::size_t i = 0; i < p.subgroup_gens.size(); ++i) {
      os << (i ? ", " : "")
         << render_word(p.subgroup_gens[i], p.generator_names);
    }
    os << '\n';
    return os.str();
  }

}  // namespace cosen
