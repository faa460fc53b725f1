#include "cosen/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace cosen {

  ParseError::ParseError(std::size_t line, std::size_t column, std::string const& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column)
                           + ": " + what),
        _line(line),
        _column(column) {}

  namespace {

    struct Position {
      std::size_t line;
      std::size_t column;
    };

    // One logical line (continuations joined) with the source position of
    // every character.
    struct LogicalLine {
      std::string           text;
      std::vector<Position> pos;
      Position              end;
    };

    std::vector<LogicalLine> split_lines(std::string_view text) {
      std::vector<LogicalLine> out;
      LogicalLine              cur;
      bool                     continuing = false;
      std::size_t              lineno     = 0;
      std::size_t              start      = 0;
      while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
          nl = text.size();
        }
        std::string_view raw = text.substr(start, nl - start);
        ++lineno;
        std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) {
          raw = raw.substr(0, hash);
        }
        while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) {
          raw.remove_suffix(1);
        }
        bool cont = !raw.empty() && raw.back() == '\\';
        if (cont) {
          raw.remove_suffix(1);
        }
        if (!continuing) {
          cur = LogicalLine{};
        } else {
          cur.text.push_back(' ');
          cur.pos.push_back({lineno, 1});
        }
        for (std::size_t i = 0; i < raw.size(); ++i) {
          cur.text.push_back(raw[i]);
          cur.pos.push_back({lineno, i + 1});
        }
        cur.end    = {lineno, raw.size() + 1};
        continuing = cont;
        if (!cont) {
          out.push_back(std::move(cur));
        }
        if (nl == text.size()) {
          break;
        }
        start = nl + 1;
      }
      if (continuing) {
        out.push_back(std::move(cur));
      }
      return out;
    }

    bool is_ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool is_ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    class WordParser {
     public:
      WordParser(std::string_view                text,
                 std::vector<Position> const*    pos,
                 Position                        end,
                 std::vector<std::string> const& names)
          : _text(text), _pos(pos), _end(end), _names(names) {}

      // list := item { ',' item } where item := word [ '=' word ]
      std::vector<Expr> list(bool allow_equation) {
        std::vector<Expr> out;
        skip_ws();
        if (at_end()) {
          return out;
        }
        while (true) {
          Expr lhs = word();
          skip_ws();
          if (peek() == '=') {
            if (!allow_equation) {
              fail("'=' is only allowed in relators");
            }
            ++_i;
            Expr rhs = word();
            lhs      = Expr::product({std::move(lhs), Expr::power(std::move(rhs), -1)});
            skip_ws();
          }
          out.push_back(std::move(lhs));
          if (at_end()) {
            break;
          }
          expect(',');
        }
        return out;
      }

      Expr single() {
        Expr e = word();
        skip_ws();
        if (!at_end()) {
          fail(std::string("unexpected '") + peek() + "'");
        }
        return e;
      }

     private:
      Expr word() {
        std::vector<Expr> terms;
        terms.push_back(term());
        while (true) {
          skip_ws();
          if (peek() != '*') {
            break;
          }
          ++_i;
          terms.push_back(term());
        }
        if (terms.size() == 1) {
          return std::move(terms[0]);
        }
        return Expr::product(std::move(terms));
      }

      Expr term() {
        Expr base = atom();
        skip_ws();
        if (peek() != '^') {
          return base;
        }
        ++_i;
        skip_ws();
        char c = peek();
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
          return Expr::power(std::move(base), integer());
        }
        return Expr::conjugate(std::move(base), atom());
      }

      Expr atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
          ++_i;
          Expr inner = word();
          expect(')');
          return inner;
        }
        if (c == '[') {
          ++_i;
          Expr u = word();
          expect(',');
          Expr v = word();
          expect(']');
          return Expr::commutator(std::move(u), std::move(v));
        }
        if (is_ident_start(c)) {
          std::size_t start = _i;
          while (!at_end() && is_ident_char(_text[_i])) {
            ++_i;
          }
          std::string name(_text.substr(start, _i - start));
          auto        it = std::find(_names.begin(), _names.end(), name);
          if (it == _names.end()) {
            fail_at(start, "unknown generator '" + name + "'");
          }
          return Expr::gen(static_cast<GeneratorId>(it - _names.begin() + 1));
        }
        if (at_end()) {
          fail("unexpected end of input");
        }
        fail(std::string("unexpected '") + c + "'");
      }

      int integer() {
        std::size_t start = _i;
        bool        neg   = false;
        if (peek() == '-' || peek() == '+') {
          neg = peek() == '-';
          ++_i;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected integer exponent");
        }
        long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(_text[_i]))) {
          v = v * 10 + (_text[_i] - '0');
          if (v > 1000000) {
            fail_at(start, "exponent too large");
          }
          ++_i;
        }
        return static_cast<int>(neg ? -v : v);
      }

      void expect(char c) {
        skip_ws();
        if (peek() != c) {
          if (at_end()) {
            fail(std::string("expected '") + c + "' before end of input");
          }
          fail(std::string("expected '") + c + "', found '" + peek() + "'");
        }
        ++_i;
      }

      void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(_text[_i]))) {
          ++_i;
        }
      }
      bool at_end() const { return _i >= _text.size(); }
      char peek() const { return at_end() ? '\0' : _text[_i]; }

      [[noreturn]] void fail(std::string const& msg) const { fail_at(_i, msg); }
      [[noreturn]] void fail_at(std::size_t i, std::string const& msg) const {
        Position p = _pos == nullptr ? Position{1, i + 1}
                     : i < _pos->size() ? (*_pos)[i]
                                        : _end;
        throw ParseError(p.line, p.column, msg);
      }

      std::string_view                _text;
      std::vector<Position> const*    _pos;
      Position                        _end;
      std::vector<std::string> const& _names;
      std::size_t                     _i = 0;
    };

    std::string trim(std::string_view s) {
      std::size_t b = 0;
      std::size_t e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      return std::string(s.substr(b, e - b));
    }

  }  // namespace

  Presentation parse_presentation(std::string_view text, std::vector<std::string>* warnings) {
    Presentation p;
    bool         have_generators = false;
    for (auto const& line : split_lines(text)) {
      std::string_view body = line.text;
      std::size_t      lead = 0;
      while (lead < body.size() && std::isspace(static_cast<unsigned char>(body[lead]))) {
        ++lead;
      }
      if (lead == body.size()) {
        continue;
      }
      std::size_t colon = body.find(':');
      if (colon == std::string_view::npos) {
        Position pos = line.pos[lead];
        throw ParseError(pos.line, pos.column, "expected 'key: value'");
      }
      std::string key  = trim(body.substr(0, colon));
      Position    kpos = line.pos[lead];
      std::size_t vstart = colon + 1;
      std::string_view value = body.substr(vstart);
      std::vector<Position> vpos(line.pos.begin() + static_cast<std::ptrdiff_t>(vstart),
                                 line.pos.end());

      if (key == "generators") {
        if (have_generators) {
          throw ParseError(kpos.line, kpos.column, "duplicate generators line");
        }
        have_generators = true;
        std::size_t i   = 0;
        while (i <= value.size()) {
          std::size_t comma = value.find(',', i);
          if (comma == std::string_view::npos) {
            comma = value.size();
          }
          std::string name = trim(value.substr(i, comma - i));
          std::size_t off  = i;
          while (off < comma && std::isspace(static_cast<unsigned char>(value[off]))) {
            ++off;
          }
          Position npos = off < vpos.size() ? vpos[off] : line.end;
          if (name.empty()) {
            if (comma == value.size() && p.generator_names.empty()
                && trim(value).empty()) {
              break;
            }
            throw ParseError(npos.line, npos.column, "empty generator name");
          }
          if (!is_ident_start(name[0])
              || !std::all_of(name.begin(), name.end(), is_ident_char)) {
            throw ParseError(npos.line, npos.column,
                             "invalid generator name '" + name + "'");
          }
          if (std::find(p.generator_names.begin(), p.generator_names.end(), name)
              != p.generator_names.end()) {
            throw ParseError(npos.line, npos.column,
                             "duplicate generator '" + name + "'");
          }
          p.generator_names.push_back(name);
          i = comma + 1;
        }
        if (p.generator_names.empty()) {
          throw ParseError(kpos.line, kpos.column, "empty generator list");
        }
      } else if (key == "relators" || key == "subgroup") {
        if (!have_generators) {
          throw ParseError(kpos.line, kpos.column,
                           "'" + key + "' before 'generators'");
        }
        bool       rel = key == "relators";
        WordParser wp(value, &vpos, line.end, p.generator_names);
        for (auto const& e : wp.list(rel)) {
          Word w = expand_word(e);
          if (rel) {
            w = cyclically_reduce(w);
            if (w.empty()) {
              if (warnings != nullptr) {
                warnings->push_back("line " + std::to_string(kpos.line)
                                    + ": relator reduces to the empty word; dropped");
              }
              continue;
            }
            p.relators.push_back(std::move(w));
          } else {
            w = free_reduce(w);
            if (w.empty()) {
              if (warnings != nullptr) {
                warnings->push_back("line " + std::to_string(kpos.line)
                                    + ": subgroup generator reduces to the empty word; dropped");
              }
              continue;
            }
            p.subgroup_gens.push_back(std::move(w));
          }
        }
      } else {
        throw ParseError(kpos.line, kpos.column, "unknown key '" + key + "'");
      }
    }
    if (!have_generators) {
      throw ParseError(1, 1, "missing generators line");
    }
    p.involutions = detect_involutions(p.relators);
    return p;
  }

  Presentation read_presentation_file(std::string const&        path,
                                      std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str(), warnings);
  }

  Expr parse_expr(std::string_view text, std::vector<std::string> const& names) {
    WordParser wp(text, nullptr, Position{1, text.size() + 1}, names);
    return wp.single();
  }

}  // namespace cosen
