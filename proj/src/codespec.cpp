#include "hmds/codespec.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace hmds {

CodeSpec::CodeSpec(std::shared_ptr<const FieldTower> tower, const ArcSet& lambda, const Transversal& s)
    : tower_(std::move(tower)),
      lambda_(ArcSet::validated(*tower_, lambda.elements())),
      s_(Transversal::validated(*tower_, s.elements())) {}

CodeSpec CodeSpec::reference_instance() {
  auto tower = std::make_shared<const FieldTower>(FieldTower::reference_instance());
  return CodeSpec(tower, reference_lambda(*tower), build_transversal(*tower, TransversalStrategy::subfield));
}

CodeSpec CodeSpec::build(std::uint32_t q, const LambdaStrategy& lambda, std::optional<TransversalStrategy> s) {
  auto tower = std::make_shared<const FieldTower>(FieldTower::for_order(q));
  const auto strategy = s.value_or(q % 2 ? TransversalStrategy::subfield : TransversalStrategy::unit_trace);
  return CodeSpec(tower, build_lambda(*tower, lambda), build_transversal(*tower, strategy));
}

void CodeSpec::require_enumerable() const {
  const std::uint64_t size = std::uint64_t{q()} * q() * q();
  if (size > kEnumerationBudget)
    throw BudgetExceeded("q^3 = " + std::to_string(size) + " codewords exceeds the enumeration budget of " +
                         std::to_string(kEnumerationBudget));
}

std::string format_list(std::span<const std::uint32_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_word(std::span<const Fq> word) {
  std::vector<std::uint32_t> v;
  for (Fq a : word) v.push_back(a.value());
  return format_list(v);
}

std::vector<std::uint32_t> parse_list(std::string_view text) {
  std::vector<std::uint32_t> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t' || item.back() == '\r')) item.remove_suffix(1);
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw std::invalid_argument("malformed integer list item '" + std::string(item) + "'");
    out.push_back(v);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

namespace {

std::vector<std::uint32_t> encodings(const FieldTower& T, const std::vector<Fq2>& v) {
  std::vector<std::uint32_t> out;
  for (Fq2 u : v) out.push_back(T.encode(u));
  return out;
}

std::vector<Fq2> decode_all(const FieldTower& T, const std::vector<std::uint32_t>& v) {
  std::vector<Fq2> out;
  for (auto n : v) out.push_back(T.decode(n));
  return out;
}

std::uint32_t single(const std::map<std::string, std::string>& kv, const std::string& key) {
  const auto v = parse_list(kv.at(key));
  if (v.size() != 1) throw std::invalid_argument("key '" + key + "' must hold one integer");
  return v[0];
}

}  // namespace

std::string write_codespec(const CodeSpec& spec) {
  const auto& T = spec.tower();
  std::ostringstream out;
  out << "hermitian-mds v1\n";
  out << "p=" << T.p() << "\n";
  out << "h=" << T.h() << "\n";
  if (T.h() > 1) out << "gq=" << format_list(T.gq()) << "\n";
  out << "gq2=" << format_list(T.gq2()) << "\n";
  out << "lambda=" << format_list(encodings(T, spec.lambda().elements())) << "\n";
  out << "s=" << format_list(encodings(T, spec.transversal().elements())) << "\n";
  return out.str();
}

CodeSpec read_codespec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  std::map<std::string, std::string> kv;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header) {
      if (line != "hermitian-mds v1") throw std::invalid_argument("missing 'hermitian-mds v1' header");
      header = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + line + "'");
    const std::string key = line.substr(0, eq);
    if (key != "p" && key != "h" && key != "gq" && key != "gq2" && key != "lambda" && key != "s")
      throw std::invalid_argument("unknown key '" + key + "'");
    if (!kv.emplace(key, line.substr(eq + 1)).second) throw std::invalid_argument("duplicate key '" + key + "'");
  }
  if (!header) throw std::invalid_argument("empty code specification");
  for (const char* key : {"p", "h", "gq2", "lambda", "s"})
    if (!kv.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");

  const std::uint32_t p = single(kv, "p");
  const std::uint32_t h = single(kv, "h");
  Coeffs gq;
  if (h > 1) {
    if (!kv.contains("gq")) throw std::invalid_argument("missing key 'gq' (required when h > 1)");
    gq = parse_list(kv.at("gq"));
  } else if (kv.contains("gq")) {
    throw std::invalid_argument("key 'gq' must be omitted when h = 1");
  }
  try {
    auto tower = std::make_shared<const FieldTower>(GaloisField(p, h, gq), parse_list(kv.at("gq2")));
    auto lambda = ArcSet::validated(*tower, decode_all(*tower, parse_list(kv.at("lambda"))));
    auto s = Transversal::validated(*tower, decode_all(*tower, parse_list(kv.at("s"))));
    return CodeSpec(tower, lambda, s);
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace hmds
