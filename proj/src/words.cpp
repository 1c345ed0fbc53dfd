#include "acx/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace acx {

void require_same_alphabet(const Alphabet& x, const Alphabet& y) {
  if (!(x == y)) throw std::invalid_argument("alphabet mismatch");
}

Alphabet::Alphabet(std::vector<std::string> letters) {
  if (letters.empty()) throw std::invalid_argument("alphabet must be non-empty");
  std::unordered_set<std::string_view> seen;
  bool multichar = false;
  for (const auto& name : letters) {
    if (name.empty()) throw std::invalid_argument("empty letter name");
    for (char c : name) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw std::invalid_argument("letter name must be alphanumeric: " + name);
    }
    if (std::isdigit(static_cast<unsigned char>(name.front())))
      throw std::invalid_argument("letter name cannot start with a digit: " + name);
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate letter: " + name);
    multichar |= name.size() > 1;
  }
  auto data = std::make_shared<Data>();
  data->names = std::move(letters);
  data->multichar = multichar;
  data_ = std::move(data);
}

Alphabet Alphabet::parse(std::string_view spec) {
  std::vector<std::string> letters;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t sep = spec.find('>', start);
    std::string_view piece =
        spec.substr(start, sep == std::string_view::npos ? spec.size() - start : sep - start);
    letters.emplace_back(piece);
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  if (letters.size() == 1 && letters.front().size() > 1)
    throw std::invalid_argument(
        "ambiguous alphabet \"" + letters.front() + "\": write the order explicitly, e.g. a>b>c");
  return Alphabet(std::move(letters));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (Letter i = 0; i < data_->names.size(); ++i)
    if (data_->names[i] == name) return i;
  return std::nullopt;
}

std::string Alphabet::spec() const {
  std::string out;
  for (const auto& name : data_->names) {
    if (!out.empty()) out += '>';
    out += name;
  }
  return out;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("word must be non-empty");
  for (Letter l : letters_)
    if (l >= alphabet_.size()) throw std::invalid_argument("letter out of range");
}

std::string Word::str() const {
  std::string out;
  bool dotted = alphabet_.has_multichar_names();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (dotted && i > 0) out += '.';
    out += alphabet_.name(letters_[i]);
  }
  return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size() || len == 0)
    throw std::invalid_argument("subword out of range");
  return Word(alphabet_, {letters_.begin() + pos, letters_.begin() + pos + len});
}

Word Word::concat(const Word& other) const {
  require_same_alphabet(alphabet_, other.alphabet_);
  std::vector<Letter> joined = letters_;
  joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
  return Word(alphabet_, std::move(joined));
}

Word Word::power(int n) const {
  if (n < 1) throw std::invalid_argument("power must be >= 1");
  std::vector<Letter> repeated;
  repeated.reserve(letters_.size() * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    repeated.insert(repeated.end(), letters_.begin(), letters_.end());
  return Word(alphabet_, std::move(repeated));
}

Ordering lex_compare(const Word& u, const Word& v) {
  require_same_alphabet(u.alphabet(), v.alphabet());
  std::size_t n = std::min(u.degree(), v.degree());
  for (std::size_t i = 0; i < n; ++i) {
    Ordering c = compare_letters(u[i], v[i]);
    if (c != Ordering::equal) return c;
  }
  // A proper prefix is strictly greater than its extensions.
  if (u.degree() == v.degree()) return Ordering::equal;
  return u.degree() < v.degree() ? Ordering::greater : Ordering::less;
}

Ordering deg_lex_compare(const Word& u, const Word& v) {
  require_same_alphabet(u.alphabet(), v.alphabet());
  if (u.degree() != v.degree())
    return u.degree() > v.degree() ? Ordering::greater : Ordering::less;
  return lex_compare(u, v);
}

bool is_alsw(const Word& u) {
  std::size_t n = u.degree();
  if (n == 1) return true;
  // u = vw with |v| = k; the rotation is wv.
  for (std::size_t k = 1; k < n; ++k) {
    bool greater = false;
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = u[i];
      Letter b = u[(k + i) % n];
      Ordering c = compare_letters(a, b);
      if (c != Ordering::equal) {
        greater = c == Ordering::greater;
        break;
      }
    }
    if (!greater) return false;  // equal rotations also disqualify
  }
  return true;
}

std::vector<Word> lyndon_factorize(const Word& u) {
  std::vector<Word> factors;
  std::size_t pos = 0;
  while (pos < u.degree()) {
    std::size_t best = 1;
    for (std::size_t len = u.degree() - pos; len >= 1; --len) {
      if (is_alsw(u.subword(pos, len))) {
        best = len;
        break;
      }
    }
    factors.push_back(u.subword(pos, best));
    pos += best;
  }
  return factors;
}

std::vector<Word> generate_alsws(const Alphabet& alphabet, int max_deg) {
  if (max_deg < 1) throw std::invalid_argument("max_deg must be >= 1");
  // Duval's generation, run on letter indices. Under the index order
  // (0 smallest) with prefix-smaller lex, a word is classically Lyndon
  // exactly when it is an ALSW under the paper's conventions, because
  // index 0 is the greatest letter and the prefix rule flips too.
  const std::size_t n = static_cast<std::size_t>(max_deg);
  const Letter top = static_cast<Letter>(alphabet.size() - 1);
  std::vector<std::vector<Word>> by_degree(n + 1);
  std::vector<Letter> w{0};
  while (true) {
    by_degree[w.size()].emplace_back(alphabet, w);
    std::size_t len = w.size();
    while (w.size() < n) w.push_back(w[w.size() % len]);
    while (!w.empty() && w.back() == top) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  std::vector<Word> out;
  for (std::size_t d = 1; d <= n; ++d)
    out.insert(out.end(), by_degree[d].begin(), by_degree[d].end());
  return out;
}

std::pair<Word, int> primitive_root(const Word& u) {
  std::size_t n = u.degree();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = u[i] == u[i - d];
    if (periodic) return {u.subword(0, d), static_cast<int>(n / d)};
  }
  return {u, 1};  // unreachable; d = n always matches
}

}  // namespace acx
