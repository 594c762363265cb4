#include "tropfan/io.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace tropfan {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line with comments stripped, split into tokens.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.assign(std::istream_iterator<std::string>(ss), std::istream_iterator<std::string>());
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> expect(const char* what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) error(std::string("unexpected end of file, expected ") + what);
    return tokens;
  }

  [[noreturn]] void error(const std::string& message) const {
    throw InputError("line " + std::to_string(number_) + ": " + message);
  }

  std::int64_t integer(const std::string& token) const {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      error("not an integer: " + token);
    }
    if (used != token.size()) error("not an integer: " + token);
    return v;
  }

  std::size_t count(const std::vector<std::string>& tokens, const char* key) const {
    if (tokens.size() != 2 || tokens[0] != key) error(std::string("expected '") + key + " <n>'");
    const std::int64_t n = integer(tokens[1]);
    if (n < 0) error(std::string("negative ") + key);
    return static_cast<std::size_t>(n);
  }

  mpq_class rational(const std::string& token) const {
    mpq_class q;
    if (token.empty() || q.set_str(token, 10) != 0) error("not a rational: " + token);
    if (q.get_den() == 0) error("zero denominator: " + token);
    q.canonicalize();
    return q;
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

void header(LineReader& r, const char* magic) {
  const auto tokens = r.expect(magic);
  if (tokens.size() != 2 || tokens[0] != magic) r.error(std::string("expected '") + magic + " 1'");
  if (tokens[1] != "1") r.error("unsupported version " + tokens[1]);
}

}  // namespace

FanDescription parse_fan(std::istream& in) {
  LineReader r(in);
  header(r, "tropfan-fan");
  FanDescription d;
  d.lattice_rank = r.count(r.expect("rank"), "rank");
  const std::size_t nrays = r.count(r.expect("rays"), "rays");
  for (std::size_t i = 0; i < nrays; ++i) {
    const auto tokens = r.expect("a ray");
    if (tokens.size() != d.lattice_rank) r.error("ray has " + std::to_string(tokens.size()) + " coordinates");
    IntVector v;
    for (const auto& t : tokens) v.push_back(r.integer(t));
    d.rays.push_back(v);
  }
  const std::size_t ncones = r.count(r.expect("cones"), "cones");
  for (std::size_t i = 0; i < ncones; ++i) {
    const auto tokens = r.expect("a cone");
    std::vector<int> c;
    if (!(tokens.size() == 1 && tokens[0] == "-"))
      for (const auto& t : tokens) {
        const std::int64_t k = r.integer(t);
        if (k < 0 || static_cast<std::size_t>(k) >= nrays) r.error("ray index out of range: " + t);
        c.push_back(static_cast<int>(k));
      }
    d.maximal_cones.push_back(c);
  }
  std::vector<std::string> tokens;
  while (r.next(tokens)) {
    const std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
    if (tokens[0] == "weights") {
      if (d.weights) r.error("duplicate weights");
      if (rest.size() != ncones) r.error("expected one weight per cone");
      d.weights.emplace();
      for (const auto& t : rest) {
        const std::int64_t w = r.integer(t);
        if (w == 0) r.error("zero weight");
        d.weights->push_back(w);
      }
    } else if (tokens[0] == "values") {
      if (d.values) r.error("duplicate values");
      if (rest.size() != nrays) r.error("expected one value per ray");
      d.values.emplace();
      for (const auto& t : rest) d.values->push_back(r.rational(t));
    } else {
      r.error("unknown key '" + tokens[0] + "'");
    }
  }
  return d;
}

FanDescription parse_fan_string(const std::string& text) {
  std::istringstream in(text);
  return parse_fan(in);
}

void write_fan(std::ostream& out, const FanDescription& d) {
  auto join = [&out](const auto& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  };
  out << "tropfan-fan 1\n";
  out << "rank " << d.lattice_rank << '\n';
  out << "rays " << d.rays.size() << '\n';
  for (const auto& v : d.rays) {
    join(v);
    out << '\n';
  }
  out << "cones " << d.maximal_cones.size() << '\n';
  for (const auto& c : d.maximal_cones) {
    if (c.empty())
      out << '-';
    else
      join(c);
    out << '\n';
  }
  if (d.weights) {
    out << "weights ";
    join(*d.weights);
    out << '\n';
  }
  if (d.values) {
    out << "values ";
    join(*d.values);
    out << '\n';
  }
}

std::string fan_to_string(const FanDescription& fan) {
  std::ostringstream out;
  write_fan(out, fan);
  return out.str();
}

Matroid parse_matroid(std::istream& in) {
  LineReader r(in);
  header(r, "tropfan-matroid");
  const std::size_t ground = r.count(r.expect("ground"), "ground");
  const std::size_t nbases = r.count(r.expect("bases"), "bases");
  std::vector<ElementSet> bases;
  for (std::size_t i = 0; i < nbases; ++i) {
    const auto tokens = r.expect("a basis");
    ElementSet b;
    if (!(tokens.size() == 1 && tokens[0] == "-"))
      for (const auto& t : tokens) b.push_back(static_cast<int>(r.integer(t)));
    bases.push_back(b);
  }
  std::vector<std::string> extra;
  if (r.next(extra)) r.error("trailing content after bases");
  return Matroid(ground, bases);
}

Matroid parse_matroid_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matroid(in);
}

void write_matroid(std::ostream& out, const Matroid& m) {
  out << "tropfan-matroid 1\nground " << m.ground() << "\nbases " << m.bases().size() << '\n';
  for (const auto& b : m.bases()) {
    if (b.empty()) out << '-';
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << '\n';
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

std::string fnv_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace tropfan
