// Command-line front end: loads JSON diagram files or DSL programs, runs
// the categorical constructions and law checks, and prints text or
// structured reports.
//
// Exit codes: 0 success, 1 law failure, 2 input error, 3 enumeration
// limit exceeded.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lccc/adjunction.hpp"
#include "lccc/diagram.hpp"
#include "lccc/dtt.hpp"

using ojson = nlohmann::ordered_json;
using namespace lccc;

namespace {

constexpr std::size_t kListingCap = 100;

struct Options {
  std::uint64_t limit = kDefaultLimit;
  std::uint64_t seed = 0;
  std::string format = "text";
};

std::vector<std::string> truncated(const std::vector<std::string>& items) {
  if (items.size() <= kListingCap) return items;
  std::vector<std::string> out(items.begin(), items.begin() + kListingCap);
  out.push_back("(+" + std::to_string(items.size() - kListingCap) +
                " more)");
  return out;
}

std::string join(const std::vector<std::string>& items,
                 const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i)
    out += (i ? sep : "") + items[i];
  return out;
}

ojson set_json(const FinSet& s) {
  ojson arr = ojson::array();
  for (const auto& e : truncated(s.elements())) arr.push_back(e);
  return arr;
}

ojson map_json(const FinMap& f) {
  ojson table = ojson::object();
  for (const auto& x : f.dom().elements()) table[x] = f(x);
  return ojson{{"dom", f.dom().name()}, {"cod", f.cod().name()},
               {"table", table}};
}

ojson diagram_json(const Diagram& d) {
  ojson sets = ojson::object(), maps = ojson::object();
  for (const auto& n : d.set_order) sets[n] = set_json(d.sets.at(n));
  for (const auto& n : d.map_order) maps[n] = map_json(d.maps.at(n));
  return ojson{{"sets", sets}, {"maps", maps}};
}

ojson law_json(const LawReport& r) {
  ojson fails = ojson::array();
  for (const auto& f : r.failures)
    fails.push_back(ojson{{"law", f.law},
                          {"instance", f.instance},
                          {"witness", f.witness}});
  return ojson{{"name", r.name},
               {"checked", r.checked},
               {"pass", r.pass()},
               {"failures", fails}};
}

ojson fibers_json(const SliceObj& x) {
  ojson fibers = ojson::object();
  for (const auto& [a, fiber] : fiber_decomposition(x.proj))
    fibers[a] = set_json(fiber);
  return fibers;
}

/// One invocation's worth of output, assembled before printing so both
/// formats come from the same data.
struct Report {
  std::string command;
  ojson inputs;  // mirrors the diagram file: "sets" and "maps"
  ojson result = ojson::object();
  std::vector<std::string> text_lines;
  std::vector<LawReport> laws;

  bool laws_pass() const {
    for (const auto& l : laws)
      if (!l.pass()) return false;
    return true;
  }
};

void emit(const Report& rep, const Options& opt,
          std::chrono::steady_clock::time_point started) {
  if (opt.format == "structured") {
    ojson doc{{"command", rep.command},
              {"seed", opt.seed},
              {"limit", opt.limit},
              {"sets", rep.inputs.value("sets", ojson::object())},
              {"maps", rep.inputs.value("maps", ojson::object())},
              {"result", rep.result}};
    ojson laws = ojson::array();
    for (const auto& l : rep.laws) laws.push_back(law_json(l));
    doc["laws"] = laws;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << "command: " << rep.command << "\n";
  std::cout << "seed: " << opt.seed << "\nlimit: " << opt.limit << "\n";
  if (rep.inputs.contains("sets")) {
    std::cout << "inputs:\n";
    for (const auto& [name, elems] : rep.inputs["sets"].items()) {
      std::vector<std::string> labels;
      for (const auto& e : elems) labels.push_back(e.get<std::string>());
      std::cout << "  set " << name << " = {" << join(labels) << "}\n";
    }
    for (const auto& [name, spec] : rep.inputs["maps"].items()) {
      std::vector<std::string> arrows;
      for (const auto& [x, y] : spec["table"].items())
        arrows.push_back(x + "->" + y.get<std::string>());
      std::cout << "  map " << name << " : "
                << spec["dom"].get<std::string>() << " -> "
                << spec["cod"].get<std::string>() << " = {" << join(arrows)
                << "}\n";
    }
  }
  if (!rep.text_lines.empty()) {
    std::cout << "result:\n";
    for (const auto& line : rep.text_lines) std::cout << "  " << line << "\n";
  }
  if (!rep.laws.empty()) {
    std::cout << "laws:\n";
    for (const auto& l : rep.laws) {
      std::cout << "  " << l.name << ": " << l.checked << " checks, "
                << (l.pass() ? "pass" : "FAIL") << "\n";
      for (const auto& f : l.failures)
        std::cout << "    " << f.law << " @ " << f.instance
                  << (f.witness.empty() ? "" : " [witness: " + f.witness + "]")
                  << "\n";
    }
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started)
                .count();
  std::cout << "wall-time: " << ms << "ms\n";
}

void describe_fibers(Report& rep, const SliceObj& x) {
  rep.text_lines.push_back(x.total().name() + " over " + x.base().name() +
                           " (" + std::to_string(x.total().size()) +
                           " elements)");
  for (const auto& [a, fiber] : fiber_decomposition(x.proj)) {
    std::vector<std::string> elems = truncated(fiber.elements());
    rep.text_lines.push_back("fiber " + a + " (" +
                             std::to_string(fiber.size()) +
                             "): " + join(elems));
  }
  rep.result = ojson{{"total", set_json(x.total())},
                     {"base", x.base().name()},
                     {"fibers", fibers_json(x)}};
}

int run_pullback(const std::string& file, const std::string& fname,
                 const std::string& gname, const Options& opt) {
  auto started = std::chrono::steady_clock::now();
  Diagram d = load_diagram(file);
  const FinMap& f = d.map(fname);
  const FinMap& g = d.map(gname);
  if (!f.cod().same_elements(g.cod()))
    throw DiagramError("'" + fname + "' and '" + gname +
                       "' do not form a cospan: codomains " +
                       f.cod().name() + " and " + g.cod().name());
  PullbackResult pb = pullback(Cospan(f, g));
  Report rep;
  rep.command = "pullback " + fname + " " + gname;
  rep.inputs = diagram_json(d);
  std::vector<std::string> carrier = truncated(pb.carrier.elements());
  rep.text_lines.push_back("carrier (" +
                           std::to_string(pb.carrier.size()) +
                           "): " + join(carrier));
  ojson breakdown = ojson::object();
  for (const auto& a : f.cod().elements()) {
    std::size_t nf = preimage(f, a).size(), ng = preimage(g, a).size();
    rep.text_lines.push_back("fiber " + a + ": |f⁻¹|·|g⁻¹| = " +
                             std::to_string(nf) + "·" + std::to_string(ng) +
                             " = " + std::to_string(nf * ng));
    breakdown[a] = nf * ng;
  }
  if (map_equal(g, identity(g.dom())))
    rep.text_lines.push_back("note: g is an identity, the carrier is "
                             "canonically " + f.dom().name());
  if (map_equal(f, identity(f.dom())))
    rep.text_lines.push_back("note: f is an identity, the carrier is "
                             "canonically " + g.dom().name());
  rep.result = ojson{{"carrier", set_json(pb.carrier)},
                     {"p", map_json(pb.p)},
                     {"q", map_json(pb.q)},
                     {"fiber_products", breakdown}};
  emit(rep, opt, started);
  return 0;
}

int run_family_command(const std::string& cmd, const std::string& file,
                       const std::string& fname, const std::string& pname,
                       const Options& opt) {
  auto started = std::chrono::steady_clock::now();
  Diagram d = load_diagram(file);
  const FinMap& f = d.map(fname);
  const FinMap& p = d.map(pname);
  const FinSet& wanted = (cmd == "pull") ? f.cod() : f.dom();
  if (!p.cod().same_elements(wanted))
    throw DiagramError("'" + pname + "' must be a family over " +
                       wanted.name() + ", but it lands in " +
                       p.cod().name());
  SliceObj family{p};
  SliceObj out = family;
  if (cmd == "sigma")
    out = dependent_sum(f)(family);
  else if (cmd == "pi")
    out = dependent_product_fiberwise(f, family, opt.limit);
  else
    out = base_change(f)(family);
  Report rep;
  rep.command = cmd + " " + fname + " " + pname;
  rep.inputs = diagram_json(d);
  describe_fibers(rep, out);
  emit(rep, opt, started);
  return 0;
}

int run_exp(const std::string& file, const std::string& xname,
            const std::string& yname, bool show_ev, const Options& opt) {
  auto started = std::chrono::steady_clock::now();
  Diagram d = load_diagram(file);
  ExpObj e = exp_obj(d.set(xname), d.set(yname), opt.limit);
  Report rep;
  rep.command = "exp " + xname + " " + yname;
  rep.inputs = diagram_json(d);
  std::vector<std::string> graphs = truncated(e.carrier.elements());
  rep.text_lines.push_back(e.carrier.name() + " (" +
                           std::to_string(e.carrier.size()) + " graphs)");
  for (const auto& g : graphs) rep.text_lines.push_back(g);
  rep.result = ojson{{"carrier", set_json(e.carrier)}};
  if (show_ev) {
    rep.result["ev"] = map_json(e.ev);
    for (const auto& pr : e.ev.dom().elements())
      rep.text_lines.push_back("ev" + pr + " = " + e.ev(pr));
  }
  emit(rep, opt, started);
  return 0;
}

int run_adjoint_check(const std::string& file, const std::string& fname,
                      bool slice_exp_flag, bool negative_control,
                      const Options& opt) {
  auto started = std::chrono::steady_clock::now();
  Diagram d = load_diagram(file);
  const FinMap& f = d.map(fname);
  std::mt19937 rng(static_cast<std::mt19937::result_type>(opt.seed));
  std::vector<SliceObj> over_dom = all_slice_objects(f.dom(), 2, "m");
  std::vector<SliceObj> over_cod = all_slice_objects(f.cod(), 2, "n");
  for (int i = 0; i < 3; ++i) {
    over_dom.push_back(random_slice_obj(rng, f.dom(), 3, "r"));
    over_cod.push_back(random_slice_obj(rng, f.cod(), 3, "s"));
  }
  Report rep;
  rep.command = "adjoint-check " + fname;
  rep.inputs = diagram_json(d);
  rep.laws.push_back(check_chain(f, over_dom, over_cod, opt.limit));
  if (slice_exp_flag)
    rep.laws.push_back(slice_exp_as_composite(f, opt.limit));
  if (negative_control) {
    AdjunctionWitness bad_unit = corrupt_unit(adj_shriek_star(f));
    rep.laws.push_back(
        check_triangle_identities(bad_unit, over_dom, over_cod));
    AdjunctionWitness bad_counit = corrupt_counit(adj_shriek_star(f));
    rep.laws.push_back(
        check_triangle_identities(bad_counit, over_dom, over_cod));
  }
  rep.result = ojson{{"adjunctions_checked", rep.laws.size()}};
  emit(rep, opt, started);
  return rep.laws_pass() ? 0 : 1;
}

int run_eval(const std::string& file, const Options& opt) {
  auto started = std::chrono::steady_clock::now();
  std::ifstream in(file);
  if (!in) throw DiagramError("cannot open '" + file + "'");
  std::string source((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
  Program prog = parse(source);
  EvalResult result = eval(prog, opt.limit);
  Report rep;
  rep.command = "eval " + file;
  rep.text_lines.push_back("program:");
  std::istringstream printed(print_program(prog));
  for (std::string line; std::getline(printed, line);)
    rep.text_lines.push_back("  " + line);
  describe_fibers(rep, result.object);
  emit(rep, opt, started);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-set slice categories, pullbacks, exponentials and "
               "the f_! ⊣ f^* ⊣ f_* chain"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("LCCC_LIMIT"))
    opt.limit = std::strtoull(env, nullptr, 10);

  std::string file, name1, name2;
  bool show_ev = false, slice_exp_flag = false, negative_control = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--limit", opt.limit, "enumeration limit");
    cmd->add_option("--seed", opt.seed, "seed for sampled instances");
    cmd->add_option("--format", opt.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* c_pullback =
      app.add_subcommand("pullback", "pullback of a cospan f, g");
  c_pullback->add_option("file", file)->required();
  c_pullback->add_option("f", name1)->required();
  c_pullback->add_option("g", name2)->required();
  add_common(c_pullback);

  for (const char* cmd : {"sigma", "pi", "pull"}) {
    CLI::App* c = app.add_subcommand(
        cmd, std::string(cmd) == "sigma"  ? "dependent sum of a family"
             : std::string(cmd) == "pi"   ? "dependent product of a family"
                                          : "base change of a family");
    c->add_option("file", file)->required();
    c->add_option("f", name1)->required();
    c->add_option("p", name2)->required();
    add_common(c);
  }

  CLI::App* c_exp = app.add_subcommand("exp", "exponential object Y^X");
  c_exp->add_option("file", file)->required();
  c_exp->add_option("X", name1)->required();
  c_exp->add_option("Y", name2)->required();
  c_exp->add_flag("--ev", show_ev, "print the evaluation table");
  add_common(c_exp);

  CLI::App* c_adj = app.add_subcommand(
      "adjoint-check", "certify the chain f_! ⊣ f^* ⊣ f_*");
  c_adj->add_option("file", file)->required();
  c_adj->add_option("f", name1)->required();
  c_adj->add_flag("--slice-exp", slice_exp_flag,
                  "also certify (−)×_A C ⊣ (−)^C");
  c_adj->add_flag("--negative-control", negative_control,
                  "also run deliberately corrupted witnesses");
  add_common(c_adj);

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate a DSL program");
  c_eval->add_option("file", file)->required();
  add_common(c_eval);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_pullback->parsed())
      return run_pullback(file, name1, name2, opt);
    if (app.get_subcommand("sigma")->parsed())
      return run_family_command("sigma", file, name1, name2, opt);
    if (app.get_subcommand("pi")->parsed())
      return run_family_command("pi", file, name1, name2, opt);
    if (app.get_subcommand("pull")->parsed())
      return run_family_command("pull", file, name1, name2, opt);
    if (c_exp->parsed()) return run_exp(file, name1, name2, show_ev, opt);
    if (c_adj->parsed())
      return run_adjoint_check(file, name1, slice_exp_flag,
                               negative_control, opt);
    if (c_eval->parsed()) return run_eval(file, opt);
  } catch (const EnumerationTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
