#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "nichols/checkers.hpp"
#include "nichols/expr.hpp"
#include "nichols/lie_closure.hpp"
#include "nichols/lyndon.hpp"
#include "nichols/nichols_algebra.hpp"
#include "nichols/spec_io.hpp"

namespace {

using nlohmann::ordered_json;
using namespace nichols;

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitEvidence = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;
constexpr int kExitCap = 66;

struct Options {
  std::string spec_path;
  bool json = false;
  int cap_override = -1;
};

ordered_json spec_json(const BraidingSpec& spec) {
  ordered_json j;
  j["n"] = spec.rank;
  j["conductor"] = spec.conductor;
  j["exponents"] = spec.exponents;
  j["cap"] = spec.degree_cap;
  return j;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["claim"] = v.claim;
  j["fingerprint"] = v.fingerprint;
  j["status"] = status_tag(v.status);
  j["summary"] = v.summary;
  ordered_json details;
  for (const auto& [key, value] : v.details) details[key] = value;
  j["details"] = details;
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

void emit(const Options& opts, const ordered_json& payload, const std::string& text) {
  if (opts.json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

int verdict_exit(const Verdict& v) {
  switch (v.status) {
    case VerdictStatus::Verified: return kExitVerified;
    case VerdictStatus::Refuted: return kExitRefuted;
    case VerdictStatus::Evidence: return kExitEvidence;
  }
  return kExitEvidence;
}

std::string verdict_text(const Verdict& v) {
  std::string out;
  out += "claim: " + v.claim + "\n";
  out += "status: " + status_tag(v.status) + "\n";
  out += "summary: " + v.summary + "\n";
  for (const auto& [key, value] : v.details) out += "  " + key + ": " + value + "\n";
  if (v.witness) out += "witness: " + *v.witness + "\n";
  return out;
}

std::string dims_text(const std::vector<int>& dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? ", " : "") + std::to_string(dims[i]);
  return out + "]";
}

NicholsAlgebra make_algebra(const Options& opts) {
  BraidingSpec spec = load_spec(opts.spec_path);
  return NicholsAlgebra(spec, opts.cap_override >= 0 ? opts.cap_override : spec.degree_cap);
}

std::optional<BracketKind> parse_kind(const std::string& token) {
  if (token == "L") return BracketKind::L;
  if (token == "R") return BracketKind::R;
  if (token == "c") return BracketKind::Braided;
  if (token == "minus" || token == "-") return BracketKind::Minus;
  return std::nullopt;
}

std::string degree_str(const DegreeVector& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

int run_info(const Options& opts) {
  NicholsAlgebra algebra = make_algebra(opts);
  const BraidingSpec& spec = algebra.spec();
  ordered_json orders = ordered_json::array();
  std::string orders_text;
  for (int i = 0; i < spec.rank; ++i) {
    ordered_json row = ordered_json::array();
    orders_text += "  ";
    for (int j = 0; j < spec.rank; ++j) {
      auto order = mult_order(spec.p(i, j));
      row.push_back(order ? ordered_json(*order) : ordered_json(nullptr));
      orders_text += (j ? " " : "") + (order ? std::to_string(*order) : std::string("inf"));
    }
    orders.push_back(row);
    orders_text += "\n";
  }
  ordered_json payload;
  payload["command"] = "info";
  payload["spec"] = spec_json(spec);
  payload["symmetric"] = is_symmetric(spec);
  payload["connected"] = is_connected(spec);
  payload["quantum_linear_space"] = is_quantum_linear_space(spec);
  payload["orders"] = orders;

  std::string text;
  text += "n = " + std::to_string(spec.rank) + ", conductor = " + std::to_string(spec.conductor) +
          ", cap = " + std::to_string(algebra.cap()) + "\n";
  text += "symmetric: " + std::string(is_symmetric(spec) ? "yes" : "no") + "\n";
  text += "connected: " + std::string(is_connected(spec) ? "yes" : "no") + "\n";
  text += "quantum linear space: " + std::string(is_quantum_linear_space(spec) ? "yes" : "no") + "\n";
  text += "orders of p_ij:\n" + orders_text;
  emit(opts, payload, text);
  return kExitVerified;
}

int run_dims(const Options& opts, int max_degree) {
  NicholsAlgebra algebra = make_algebra(opts);
  std::vector<int> dims = algebra.dims(max_degree);
  int total = 0;
  for (int d : dims) total += d;
  ordered_json payload;
  payload["command"] = "nichols-dims";
  payload["spec"] = spec_json(algebra.spec());
  payload["max_degree"] = max_degree;
  payload["dims"] = dims;
  payload["total"] = total;
  emit(opts, payload,
       "dims by degree (0.." + std::to_string(max_degree) + "): " + dims_text(dims) +
           "\ntotal: " + std::to_string(total) + "\n");
  return kExitVerified;
}

int run_standard_words(const Options& opts, int degree) {
  NicholsAlgebra algebra = make_algebra(opts);
  std::vector<Word> words = standard_words(algebra, degree);
  ordered_json list = ordered_json::array();
  std::string text;
  for (const Word& w : words) {
    list.push_back(w.str());
    text += w.str() + "\n";
  }
  ordered_json payload;
  payload["command"] = "standard-words";
  payload["spec"] = spec_json(algebra.spec());
  payload["degree"] = degree;
  payload["words"] = list;
  emit(opts, payload, text);
  return kExitVerified;
}

int run_roots(const Options& opts, int max_degree) {
  NicholsAlgebra algebra = make_algebra(opts);
  RootSystemReport report = root_system(algebra, max_degree);
  ordered_json roots = ordered_json::array();
  std::string text = "positive roots (up to degree " + std::to_string(max_degree) + "):\n";
  for (const DegreeVector& d : report.positive_roots) {
    roots.push_back(d);
    text += "  " + degree_str(d) + "\n";
  }
  text += "saturated: " + std::string(report.saturated ? "yes" : "no") + "\n";
  ordered_json payload;
  payload["command"] = "roots";
  payload["spec"] = spec_json(algebra.spec());
  payload["max_degree"] = max_degree;
  payload["positive_roots"] = roots;
  payload["complete_up_to"] = report.complete_up_to;
  payload["saturated"] = report.saturated;
  emit(opts, payload, text);
  return kExitVerified;
}

int run_lie(const Options& opts, const std::string& kind_token, int max_degree, bool with_basis) {
  auto kind = parse_kind(kind_token);
  if (!kind) {
    std::cerr << "unknown bracket kind: " << kind_token << " (use L, R, c or minus)\n";
    return kExitUsage;
  }
  NicholsAlgebra algebra = make_algebra(opts);
  GradedSubspace gs = generate(algebra, *kind, max_degree);
  ordered_json payload;
  payload["command"] = "lie";
  payload["spec"] = spec_json(algebra.spec());
  payload["bracket"] = kind_token;
  payload["max_degree"] = max_degree;
  payload["dims"] = gs.dims();
  payload["total"] = gs.total_dim();
  payload["stabilized"] = gs.stabilized;
  std::string text = "dims by degree (1.." + std::to_string(max_degree) + "): " +
                     dims_text(gs.dims()) + "\ntotal: " + std::to_string(gs.total_dim()) +
                     "\nstabilized: " + (gs.stabilized ? "yes" : "no") + "\n";
  if (with_basis) {
    ordered_json basis;
    for (int d = 1; d <= max_degree; ++d) {
      if (gs.slice_rank(d) == 0) continue;
      ordered_json rows = ordered_json::array();
      text += "degree " + std::to_string(d) + ":\n";
      for (int r = 0; r < gs.slice_rank(d); ++r) {
        std::string element = slice_element(algebra, gs, d, r).str();
        rows.push_back(element);
        text += "  " + element + "\n";
      }
      basis[std::to_string(d)] = rows;
    }
    payload["basis"] = basis;
  }
  emit(opts, payload, text);
  return kExitVerified;
}

int run_eval(const Options& opts, const std::string& source, bool normal_form) {
  NicholsAlgebra algebra = make_algebra(opts);
  FreeElement value = parse_element(source, algebra.spec());
  ordered_json payload;
  payload["command"] = "eval";
  payload["spec"] = spec_json(algebra.spec());
  payload["expr"] = source;
  payload["value"] = value.str();
  std::string text = value.str() + "\n";
  if (normal_form) {
    FreeElement nf = algebra.normal_form(value);
    payload["normal_form"] = nf.str();
    text += "normal form: " + nf.str() + "\n";
  }
  emit(opts, payload, text);
  return kExitVerified;
}

int run_check(const Options& opts, const std::string& claim) {
  NicholsAlgebra algebra = make_algebra(opts);
  Verdict v;
  if (claim == "prop5.1") v = check_prop_5_1(algebra);
  else if (claim == "prop5.2") v = check_prop_5_2(algebra);
  else if (claim == "prop5.3") v = check_prop_5_3(algebra, algebra.spec().rank);
  else if (claim == "prop5.4") v = check_prop_5_4(algebra, algebra.spec().rank);
  else if (claim == "thm4.3") v = check_theorem_4_3(algebra);
  else if (claim == "thm4.5") v = check_theorem_4_5(algebra);
  else if (claim == "lemma3.3") v = check_lemma_3_3(algebra);
  else if (claim == "lemma3.8") v = check_lemma_3_8(algebra);
  else if (claim == "lemma6.5") v = check_q_identities(algebra, QIdentityPart::Lemma65);
  else if (claim == "lemma6.6") v = check_q_identities(algebra, QIdentityPart::Lemma66);
  else if (claim == "lemma6.7") v = check_q_identities(algebra, QIdentityPart::Lemma67);
  else if (claim == "prop6.10") v = check_prop_6_10(algebra);
  else if (claim == "thm6.15") v = finiteness_report(algebra, algebra.cap());
  else {
    std::cerr << "unknown claim: " << claim
              << "\nclaims: prop5.1 prop5.2 prop5.3 prop5.4 thm4.3 thm4.5 lemma3.3 lemma3.8 "
                 "lemma6.5 lemma6.6 lemma6.7 prop6.10 thm6.15\n";
    return kExitUsage;
  }
  ordered_json payload;
  payload["command"] = "check";
  payload["spec"] = spec_json(algebra.spec());
  payload["verdict"] = verdict_json(v);
  emit(opts, payload, verdict_text(v));
  return verdict_exit(v);
}

int run_probe(const Options& opts, const std::string& pair_token, int max_degree) {
  auto comma = pair_token.find(',');
  if (comma == std::string::npos) {
    std::cerr << "--equality expects two bracket kinds, e.g. L,minus\n";
    return kExitUsage;
  }
  auto kind1 = parse_kind(pair_token.substr(0, comma));
  auto kind2 = parse_kind(pair_token.substr(comma + 1));
  if (!kind1 || !kind2) {
    std::cerr << "unknown bracket kind in: " << pair_token << " (use L, R, c or minus)\n";
    return kExitUsage;
  }
  NicholsAlgebra algebra = make_algebra(opts);
  EqualityReport report = equality_probe(algebra, *kind1, *kind2, max_degree);
  ordered_json payload;
  payload["command"] = "probe";
  payload["spec"] = spec_json(algebra.spec());
  payload["equality"] = pair_token;
  payload["max_degree"] = max_degree;
  payload["equal_by_degree"] = report.equal_by_degree;
  std::string text;
  for (int d = 1; d <= max_degree; ++d)
    text += "degree " + std::to_string(d) + ": " +
            (report.equal_by_degree[d - 1] ? "equal" : "unequal") + "\n";
  if (report.first_difference) {
    payload["first_difference"] = *report.first_difference;
    text += "first difference at degree " + std::to_string(*report.first_difference) + "\n";
    if (report.witness) {
      payload["witness"] = *report.witness;
      text += "witness: " + *report.witness + "\n";
    }
  } else {
    text += "equal up to the cap (evidence only)\n";
  }
  emit(opts, payload, text);
  return report.first_difference ? kExitRefuted : kExitEvidence;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for Nichols algebras of diagonal type and their bicharacter Lie closures"};
  app.require_subcommand(1);

  Options opts;
  app.add_option("--spec", opts.spec_path, "braiding spec JSON file")->required();
  app.add_flag("--json", opts.json, "emit a structured JSON report");
  app.add_option("--cap", opts.cap_override, "override the degree cap");

  auto* info = app.add_subcommand("info", "braiding properties");

  int max_degree = 8;
  auto* dims = app.add_subcommand("nichols-dims", "per-degree dimensions of B(V)");
  dims->add_option("--max-degree", max_degree, "top degree")->required();

  int word_degree = 1;
  auto* words = app.add_subcommand("standard-words", "standard-word basis of one degree");
  words->add_option("--degree", word_degree, "degree")->required();

  int roots_degree = 8;
  auto* roots = app.add_subcommand("roots", "degrees of hard super-letters");
  roots->add_option("--max-degree", roots_degree, "top degree")->required();

  std::string lie_kind;
  int lie_degree = 8;
  bool lie_basis = false;
  auto* lie = app.add_subcommand("lie", "graded Lie closure of V");
  lie->add_option("--bracket", lie_kind, "bracket kind: L, R, c or minus")->required();
  lie->add_option("--max-degree", lie_degree, "top degree")->required();
  lie->add_flag("--basis", lie_basis, "print slice bases");

  std::string expr_source;
  bool normal_form = false;
  auto* eval = app.add_subcommand("eval", "evaluate an element expression");
  eval->add_option("--expr", expr_source, "element expression")->required();
  eval->add_flag("--normal-form", normal_form, "also reduce to the standard-word basis");

  std::string claim;
  auto* check = app.add_subcommand("check", "run one claim checker");
  check->add_option("--claim", claim, "claim id, e.g. thm4.3")->required();

  std::string equality;
  int probe_degree = 8;
  auto* probe = app.add_subcommand("probe", "compare two closures degree by degree");
  probe->add_option("--equality", equality, "bracket kind pair, e.g. L,minus")->required();
  probe->add_option("--max-degree", probe_degree, "top degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (info->parsed()) return run_info(opts);
    if (dims->parsed()) return run_dims(opts, max_degree);
    if (words->parsed()) return run_standard_words(opts, word_degree);
    if (roots->parsed()) return run_roots(opts, roots_degree);
    if (lie->parsed()) return run_lie(opts, lie_kind, lie_degree, lie_basis);
    if (eval->parsed()) return run_eval(opts, expr_source, normal_form);
    if (check->parsed()) return run_check(opts, claim);
    if (probe->parsed()) return run_probe(opts, equality, probe_degree);
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitCap;
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
