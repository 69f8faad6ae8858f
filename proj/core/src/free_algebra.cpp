#include "invalg/free_algebra.hpp"

#include <algorithm>
#include <cctype>

namespace invalg {

namespace {

constexpr char kQRank = 0;

char rank_of_letter(char c) {
  if (c == 'q') return kQRank;
  return static_cast<char>(static_cast<int>(generator_from_letter(c)) + 1);
}

char letter_of_rank(char r) {
  return r == kQRank ? 'q' : generator_letter(static_cast<Generator>(r - 1));
}

std::string render(const std::string& key) {
  if (key.empty()) return "1";
  std::string out;
  out.reserve(key.size());
  for (char r : key) out += letter_of_rank(r);
  return out;
}

std::string relabel(const std::string& key, const GeneratorMap& map) {
  std::string out = key;
  for (char& r : out) {
    if (r != kQRank) r = static_cast<char>(static_cast<int>(map[static_cast<std::size_t>(r - 1)]) + 1);
  }
  return out;
}

}  // namespace

char generator_letter(Generator g) noexcept {
  static constexpr std::array<char, kMaxGenerators> letters{'x', 'y', 'z', 'w'};
  return letters[static_cast<std::size_t>(g)];
}

Generator generator_from_letter(char c) {
  switch (c) {
    case 'x': return Generator::x;
    case 'y': return Generator::y;
    case 'z': return Generator::z;
    case 'w': return Generator::w;
    default: break;
  }
  throw std::invalid_argument(std::string{"unknown generator letter '"} + c + "'");
}

// ---------------------------------------------------------------------------
// QMonomial

QMonomial QMonomial::q() {
  QMonomial m;
  m.key_.push_back(kQRank);
  return m;
}

QMonomial QMonomial::generator(Generator g) {
  QMonomial m;
  m.key_.push_back(static_cast<char>(static_cast<int>(g) + 1));
  return m;
}

QMonomial QMonomial::from_raw(std::string_view raw) {
  QMonomial m;
  bool seen_q = false;
  for (char c : raw) {
    const char r = rank_of_letter(c);
    if (r == kQRank) {
      if (seen_q) continue;
      seen_q = true;
    }
    m.key_.push_back(r);
  }
  return m;
}

std::string QMonomial::word() const {
  std::string out;
  for (char r : key_) {
    if (r != kQRank) out += letter_of_rank(r);
  }
  return out;
}

std::optional<std::size_t> QMonomial::q_pos() const noexcept {
  const auto pos = key_.find(kQRank);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

QMonomial operator*(const QMonomial& a, const QMonomial& b) {
  QMonomial m;
  m.key_.reserve(a.key_.size() + b.key_.size());
  m.key_ = a.key_;
  if (a.has_q()) {
    for (char r : b.key_) {
      if (r != kQRank) m.key_.push_back(r);
    }
  } else {
    m.key_ += b.key_;
  }
  return m;
}

QMonomial QMonomial::map_generators(const GeneratorMap& map) const {
  QMonomial m;
  m.key_ = relabel(key_, map);
  return m;
}

std::string QMonomial::to_string() const { return render(key_); }

// ---------------------------------------------------------------------------
// RawWord

RawWord RawWord::q() {
  RawWord w;
  w.key_.push_back(kQRank);
  return w;
}

RawWord RawWord::generator(Generator g) {
  RawWord w;
  w.key_.push_back(static_cast<char>(static_cast<int>(g) + 1));
  return w;
}

RawWord operator*(const RawWord& a, const RawWord& b) {
  RawWord w;
  w.key_ = a.key_;
  std::string_view tail = b.key_;
  if (!w.key_.empty() && !tail.empty() && w.key_.back() == kQRank && tail.front() == kQRank) {
    tail.remove_prefix(1);
  }
  w.key_ += tail;
  return w;
}

RawWord RawWord::map_generators(const GeneratorMap& map) const {
  RawWord w;
  w.key_ = relabel(key_, map);
  return w;
}

std::string RawWord::to_string() const { return render(key_); }

// ---------------------------------------------------------------------------
// Rewriting

namespace {

// A redex is a q followed by a (possibly empty) generator-only run and
// another q; firing it deletes the closing q. Returns the position of the q to
// delete for the chosen redex, or npos.
std::size_t find_redex(const std::string& w, RewriteStrategy strategy) {
  std::size_t best = std::string::npos;
  std::size_t open = std::string::npos;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 'q') continue;
    if (open != std::string::npos) {
      if (strategy == RewriteStrategy::leftmost) return i;
      best = i;
    }
    open = i;
  }
  return best;
}

}  // namespace

std::string rewrite_to_normal_form(std::string_view raw, RewriteStrategy strategy) {
  std::string w{raw};
  for (char c : w) {
    if (c != 'q') generator_from_letter(c);
  }
  for (;;) {
    const std::size_t pos = find_redex(w, strategy);
    if (pos == std::string::npos) return w;
    w.erase(pos, 1);
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

FreeElement parse_free_element(Field f, std::string_view text) {
  FreeElement out(f);
  text = trim(text);
  if (text == "0") return out;
  std::size_t start = 0;
  int depth = 0;
  bool negative = false;
  const auto flush = [&](std::size_t end) {
    const std::string_view term = trim(text.substr(start, end - start));
    if (term.empty()) throw ScalarError("empty term in element '" + std::string{text} + "'");
    const auto star = term.rfind('*');
    std::string_view word = term;
    ParamPoly coef = ParamPoly::constant(f, 1);
    if (star != std::string_view::npos) {
      coef = ParamPoly::parse(f, term.substr(0, star));
      word = trim(term.substr(star + 1));
    }
    QMonomial m;
    if (word != "1") {
      for (char c : word) {
        if (c != 'q' && std::string_view{"xyzw"}.find(c) == std::string_view::npos) {
          throw ScalarError("malformed monomial '" + std::string{word} + "'");
        }
      }
      m = QMonomial::from_raw(word);
    }
    out.add_term(m, negative ? -coef : coef);
  };
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    start = i = 1;
  }
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-') && i > start) {
      // A sign directly after '*', '^' or '/' belongs to the coefficient.
      std::size_t j = i;
      while (j > start && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
      const char prev = text[j - 1];
      if (prev == '*' || prev == '^' || prev == '/' || prev == '(') continue;
      flush(i);
      negative = c == '-';
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

}  // namespace invalg
