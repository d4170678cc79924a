#include "crystal/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "crystal/axioms.hpp"
#include "crystal/builder.hpp"
#include "crystal/oracle.hpp"
#include "crystal/pbw.hpp"
#include "crystal/serialize.hpp"

namespace crystal {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::InvalidInput, "cannot write " + path);
  f << text;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, "not an integer list: " + s);
    }
  }
  return out;
}

Gcm gcm_by_name(const std::string& name) {
  if (name == "b2") return Gcm::b2();
  if (name == "a2") return Gcm::a2();
  if (name == "b3") return Gcm::b3();
  if (name == "c3") return Gcm::c3();
  if (name.rfind("custom:", 0) == 0) return gcm_from_json(read_file(name.substr(7)));
  throw Error(Errc::InvalidInput, "unknown matrix " + name);
}

std::size_t budget_from_env() {
  const char* raw = std::getenv("CRYSTAL_BUDGET");
  if (!raw || !*raw) return pbw::kDefaultVertexBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw Error(Errc::InvalidInput, std::string("bad CRYSTAL_BUDGET: ") + raw);
  return static_cast<std::size_t>(v);
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded: return kExitBudget;
    case Errc::SynthesisInconsistency:
    case Errc::NotIsomorphic:
    case Errc::MembershipMismatch: return kExitFail;
    default: return kExitInput;
  }
}

struct GenArgs {
  std::string gcm = "b2";
  std::string hw;
  std::string method = "pbw";
  std::string out = "-";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const Gcm gcm = gcm_by_name(a.gcm);
  const std::vector<int> hw = parse_ints(a.hw);
  if (hw.size() != gcm.rank()) throw Error(Errc::InvalidInput, "--hw needs one entry per color");
  const std::size_t budget = budget_from_env();
  GraphDocument doc{ColoredGraph(gcm), {}, std::nullopt};
  if (a.method == "pbw") {
    if (!(gcm == Gcm::b2())) throw Error(Errc::InvalidInput, "the pbw method needs --gcm b2");
    doc = make_document(pbw::generate({hw[0], hw[1]}, {budget, pbw::kDefaultMembershipRule}));
  } else {
    SynthesisOptions opts;
    opts.budget = budget;
    doc = make_document(synthesize(gcm, hw, opts));
  }
  write_file(a.out, to_json(doc), out);
  return kExitPass;
}

struct CheckArgs {
  std::string in;
  std::string report;
  std::string hw;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const GraphDocument doc = document_from_json(read_file(a.in));
  if (!doc.graph.cartan()) throw Error(Errc::InvalidInput, "document has no cartan matrix");
  std::optional<PairingVector> expected;
  if (!a.hw.empty()) expected = parse_ints(a.hw);
  const CheckReport report = check_all(doc.graph, *doc.graph.cartan(), expected);
  if (!a.report.empty()) write_file(a.report, to_json(report), out);
  if (a.report != "-") {
    out << (report.pass ? "pass" : "FAIL") << ": " << doc.graph.vertex_count() << " vertices, "
        << report.violations.size() << " violations\n";
    for (std::size_t k = 0; k < report.violations.size() && k < 10; ++k) {
      const Violation& v = report.violations[k];
      out << "  " << to_string(v.axiom);
      if (v.pair) out << " (" << v.pair->first << "," << v.pair->second << ")";
      out << " at " << v.witness << ": " << v.detail << "\n";
    }
  }
  return report.pass ? kExitPass : kExitFail;
}

struct IsoArgs {
  std::string first;
  std::string second;
  std::string out;
};

int cmd_iso(const IsoArgs& a, std::ostream& out, std::ostream& err) {
  const GraphDocument x = document_from_json(read_file(a.first));
  const GraphDocument y = document_from_json(read_file(a.second));
  for (const GraphDocument* d : {&x, &y}) {
    if (!d->graph.cartan()) throw Error(Errc::InvalidInput, "document has no cartan matrix");
    if (!check_all(d->graph, *d->graph.cartan()).pass)
      throw Error(Errc::PrereqFailed, "an input does not pass check_all");
  }
  IsoMap map;
  try {
    map = build_isomorphism(x.graph, y.graph);
  } catch (const Error& e) {
    if (e.code() != Errc::PrereqFailed && e.code() != Errc::NotIsomorphic) throw;
    err << "not isomorphic: " << e.what() << "\n";
    return kExitFail;
  }
  if (!a.out.empty()) write_file(a.out, to_json(map), out);
  if (a.out != "-") out << "isomorphic: " << map.forward.size() << " vertices\n";
  return kExitPass;
}

struct DotArgs {
  std::string in;
  std::string out = "-";
};

int cmd_export_dot(const DotArgs& a, std::ostream& out) {
  write_file(a.out, to_dot(document_from_json(read_file(a.in))), out);
  return kExitPass;
}

struct VerifyArgs {
  int max_hw = 3;
  int max_box = 8;
  bool inject_bug = false;
  std::string json;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.max_hw < 0 || a.max_box < 1) throw Error(Errc::InvalidInput, "--max-hw >= 0 and --max-box >= 1 required");
  std::vector<VerificationReport> reports;

  LemmaHooks hooks;
  if (a.inject_bug) hooks.r_upper = broken_r_upper;
  reports.push_back(verify_lemmas(a.max_box, hooks));

  VerificationReport dims{"generate size equals the Weyl dimension on [0," + std::to_string(a.max_hw) + "]^2", 0, 0,
                          {}};
  VerificationReport involution{"arrow reversal involution on [0," + std::to_string(a.max_hw) + "]^2", 0, 0, {}};
  for (int l1 = 0; l1 <= a.max_hw; ++l1)
    for (int l2 = 0; l2 <= a.max_hw; ++l2) {
      const pbw::HighestWeightB2 lam{l1, l2};
      for (auto r : {verify_kakunin1(lam), verify_kakunin2(lam), verify_kakunin3(lam)}) reports.push_back(r);
      const auto n = pbw::generate(lam).elements.size();
      ++dims.domain_size;
      ++dims.hits;
      if (static_cast<std::int64_t>(n) != weyl_dim_b2(l1, l2))
        dims.counterexamples.push_back("(" + std::to_string(l1) + "," + std::to_string(l2) + "): " + std::to_string(n));
      const InvolutionReport inv = verify_reversal_involution(lam);
      involution.domain_size += n;
      ++involution.hits;
      if (!inv.ok)
        involution.counterexamples.push_back("(" + std::to_string(l1) + "," + std::to_string(l2) + "): " + inv.detail);
    }
  reports.push_back(dims);
  reports.push_back(involution);

  VerificationReport pin{"exactly one membership rule matches the dimensions", 2, 0, {}};
  for (const MembershipPin& p : pin_membership_rule(a.max_hw))
    if (p.matches_dimensions) ++pin.hits;
  if (pin.hits != 1) pin.counterexamples.push_back(std::to_string(pin.hits) + " rules match");
  reports.push_back(pin);

  bool all = true;
  out << std::left << std::setw(70) << "claim" << std::setw(10) << "domain" << std::setw(8) << "hits" << "result\n";
  for (const VerificationReport& r : reports) {
    all = all && r.passed();
    out << std::left << std::setw(70) << r.claim << std::setw(10) << r.domain_size << std::setw(8) << r.hits
        << (r.passed() ? "pass" : "FAIL (" + std::to_string(r.counterexamples.size()) + ")") << "\n";
    for (std::size_t k = 0; k < r.counterexamples.size() && k < 3; ++k) out << "    " << r.counterexamples[k] << "\n";
  }
  if (!a.json.empty()) write_file(a.json, to_json(reports), out);
  return all ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"B2 crystal construction and local axiom checking", "crystal"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Build B(lambda) and write it as JSON");
  g->add_option("--gcm", gen.gcm, "b2, a2, b3, c3 or custom:<path>")->capture_default_str();
  g->add_option("--hw", gen.hw, "Highest weight pairings, comma separated")->required();
  g->add_option("--method", gen.method, "pbw or axioms")
      ->check(CLI::IsMember({"pbw", "axioms"}))
      ->capture_default_str();
  g->add_option("--out", gen.out, "Output path, - for stdout")->capture_default_str();

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Check a graph document against the axioms");
  c->add_option("--in", check.in, "Graph document")->required();
  c->add_option("--report", check.report, "Write the JSON report here, - for stdout");
  c->add_option("--hw", check.hw, "Expected phi at the maximum, comma separated");

  IsoArgs iso;
  auto* i = app.add_subcommand("iso", "Build the isomorphism between two crystals");
  i->add_option("first", iso.first, "First graph document")->required();
  i->add_option("second", iso.second, "Second graph document")->required();
  i->add_option("--out", iso.out, "Write the vertex map here, - for stdout");

  DotArgs dot;
  auto* d = app.add_subcommand("export-dot", "Write a graph document as DOT");
  d->add_option("--in", dot.in, "Graph document")->required();
  d->add_option("--out", dot.out, "Output path, - for stdout")->capture_default_str();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify-paper", "Run the brute-force verification suite");
  v->add_option("--max-hw", verify.max_hw, "Highest weights scanned: [0,max-hw]^2")->capture_default_str();
  v->add_option("--max-box", verify.max_box, "PBW box scanned: [0,max-box]^4")->capture_default_str();
  v->add_flag("--inject-lemma-bug", verify.inject_bug, "Break one closed form to test the harness");
  v->add_option("--json", verify.json, "Write the reports as JSON here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*g) return cmd_gen(gen, out);
    if (*c) return cmd_check(check, out);
    if (*i) return cmd_iso(iso, out, err);
    if (*d) return cmd_export_dot(dot, out);
    return cmd_verify(verify, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_for(e.code());
  }
}

}  // namespace crystal
