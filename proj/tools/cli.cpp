#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "hmds/code.hpp"
#include "hmds/codespec.hpp"
#include "hmds/decoder.hpp"
#include "hmds/linalg.hpp"
#include "hmds/simulate.hpp"
#include "hmds/verify.hpp"

namespace hmds::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CodeSpec load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open code file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return read_codespec(buf.str());
}

Word parse_word(const CodeSpec& spec, const std::string& text) {
  Word w;
  for (auto v : parse_list(text)) w.push_back(spec.field().element(v));
  if (w.size() != spec.length())
    throw UsageError("word has " + std::to_string(w.size()) + " symbols, code length is " +
                     std::to_string(spec.length()));
  return w;
}

Message parse_message(const CodeSpec& spec, const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 2) throw UsageError("message must be 'x,y' (two GF(q^2) encodings)");
  const Message m{spec.tower().decode(v[0]), spec.tower().decode(v[1])};
  if (!spec.transversal().contains(m.y)) throw UsageError("message y is not an element of S");
  return m;
}

std::string format_message(const CodeSpec& spec, const Message& m) {
  const std::uint32_t v[] = {spec.tower().encode(m.x), spec.tower().encode(m.y)};
  return format_list(v);
}

std::string format_positions(const std::vector<std::size_t>& p) {
  std::vector<std::uint32_t> v(p.begin(), p.end());
  return format_list(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermitian-form MDS codes: construction, verification and geometric decoding", "hmds"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a code instance and write its specification file");
  std::uint32_t q = 0;
  bool reference = false;
  std::string lambda_mode = "greedy";
  std::string lambda_list;
  std::uint32_t norm_value = 1;
  std::string s_mode;
  std::string out_path;
  construct->add_option("--q", q, "Field order (prime power, q^2 <= 65536)");
  construct->add_flag("--paper-example", reference, "The q=5 worked example (X^2-X+2, its Lambda and S=GF(5))");
  construct->add_option("--lambda", lambda_mode, "Lambda strategy")
      ->check(CLI::IsMember({"greedy", "norm-circle", "explicit"}));
  construct->add_option("--lambda-list", lambda_list, "Explicit Lambda as GF(q^2) encodings");
  construct->add_option("--norm", norm_value, "Norm value for --lambda norm-circle");
  construct->add_option("--s", s_mode, "Transversal strategy")->check(CLI::IsMember({"subfield", "unit-trace"}));
  construct->add_option("--out", out_path, "Output file (default: stdout)");

  std::string code_path;
  auto add_code = [&](CLI::App* sub) { sub->add_option("--code", code_path, "Code specification file")->required(); };

  auto* encode_cmd = app.add_subcommand("encode", "Encode a message (x,y)");
  add_code(encode_cmd);
  std::string message_text;
  encode_cmd->add_option("--message", message_text, "x,y as GF(q^2) encodings")->required();

  auto* decode_cmd = app.add_subcommand("decode", "Decode a received word");
  add_code(decode_cmd);
  std::string word_text;
  std::string method = "geometric";
  decode_cmd->add_option("--word", word_text, "Comma-separated GF(q) symbols")->required();
  decode_cmd->add_option("--method", method, "Decoder")->check(CLI::IsMember({"geometric", "ml"}));

  auto* weights_cmd = app.add_subcommand("weights", "Weight distribution by enumeration and by formula");
  add_code(weights_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check every code property exhaustively");
  add_code(verify_cmd);

  auto* generator_cmd = app.add_subcommand("generator", "Print the canonical generator matrix");
  add_code(generator_cmd);

  auto* simulate_cmd = app.add_subcommand("simulate", "Seeded channel simulation with the geometric decoder");
  add_code(simulate_cmd);
  std::size_t errors = 1;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  simulate_cmd->add_option("--errors", errors, "Errors injected per trial")->required();
  simulate_cmd->add_option("--trials", trials, "Number of trials");
  simulate_cmd->add_option("--seed", seed, "Master seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (construct->parsed()) {
      std::optional<CodeSpec> spec;
      if (reference) {
        if (q != 0 && q != 5) throw UsageError("--paper-example requires q = 5");
        spec = CodeSpec::reference_instance();
      } else {
        if (q == 0) throw UsageError("--q is required");
        const auto tower = std::make_shared<const FieldTower>(FieldTower::for_order(q));
        LambdaStrategy strategy = GreedyLambda{};
        if (lambda_mode == "norm-circle") strategy = NormCircle{tower->base().element(norm_value)};
        if (lambda_mode == "explicit") {
          std::vector<Fq2> e;
          for (auto v : parse_list(lambda_list)) e.push_back(tower->decode(v));
          strategy = ExplicitLambda{std::move(e)};
        }
        const auto s = s_mode.empty() ? (q % 2 ? TransversalStrategy::subfield : TransversalStrategy::unit_trace)
                       : s_mode == "subfield" ? TransversalStrategy::subfield
                                              : TransversalStrategy::unit_trace;
        spec.emplace(tower, build_lambda(*tower, strategy), build_transversal(*tower, s));
      }
      const std::string text = write_codespec(*spec);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + out_path + "'");
        f << text;
      }
      return kOk;
    }

    const CodeSpec spec = load(code_path);
    if (encode_cmd->parsed()) {
      out << format_word(encode(spec, parse_message(spec, message_text))) << '\n';
      return kOk;
    }
    if (decode_cmd->parsed()) {
      const Word r = parse_word(spec, word_text);
      if (method == "ml") {
        const auto ml = ml_decode(spec, r);
        const auto plane = codeword_to_plane(spec, ml.codeword);
        std::vector<std::size_t> corrected;
        for (std::size_t i = 0; i < r.size(); ++i)
          if (r[i] != ml.codeword[i]) corrected.push_back(i);
        out << "codeword=" << format_word(ml.codeword) << '\n'
            << "message=" << format_message(spec, plane_to_message(spec, *plane)) << '\n'
            << "corrected=" << format_positions(corrected) << '\n'
            << "tie=" << (ml.tie ? "yes" : "no") << '\n';
        return kOk;
      }
      const auto result = geometric_decode(spec, r);
      if (!result) {
        out << "FAIL\n";
        return kDecodeFailed;
      }
      out << "codeword=" << format_word(result->codeword) << '\n'
          << "message=" << format_message(spec, result->message) << '\n'
          << "corrected=" << format_positions(result->corrected_positions) << '\n';
      return kOk;
    }
    if (weights_cmd->parsed()) {
      print_weights(out, spec);
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const auto report = verify_code(spec);
      print_report(out, report);
      return report.passed() ? kOk : kVerificationFailed;
    }
    if (generator_cmd->parsed()) {
      out << to_text(generator_matrix(spec));
      return kOk;
    }
    if (simulate_cmd->parsed()) {
      print_simulation(out, simulate(spec, errors, trials, seed));
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hmds::cli
