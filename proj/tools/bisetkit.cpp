#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bisetkit/bisetkit.hpp"

using namespace bisetkit;

namespace {

struct Options {
  bool json = false;
  std::string cache_dir;
  int order_bound = 0;
  std::string catalog;
};

int usage_error(const std::string& msg) {
  std::cerr << "bisetkit: " << msg << "\n";
  return 2;
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json read_json_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorCode::InvalidInput, "cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

ElementSet parse_subgroup(const std::string& text, const FiniteGroup& g) {
  if (text.rfind("class:", 0) == 0) {
    int c = std::stoi(text.substr(6));
    const auto& lat = lattice(g);
    require(c >= 0 && c < lat.class_count(), ErrorCode::InvalidInput, "class index out of range");
    return lat.class_rep(c);
  }
  ElementSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = std::stoi(item);
    require(v >= 0 && v < g.order(), ErrorCode::InvalidInput, "element index out of range");
    s.insert(static_cast<Element>(v));
  }
  require(is_subgroup(g, s), ErrorCode::NotSubgroup, "elements do not form a subgroup of " + g.label());
  return s;
}

std::string set_text(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    out += (first ? "" : ",") + std::to_string(e);
    first = false;
  });
  return out + "}";
}

std::string burnside_text(const BurnsideElement& x) {
  std::ostringstream os;
  if (x.is_zero()) os << "0\n";
  for (const auto& [c, q] : x.terms())
    os << to_string(q) << " * [" << x.left().label() << " x " << x.right().label() << " / L" << c << "] "
       << set_text(x.lattice_ref().class_rep(c)) << "\n";
  return os.str();
}

std::string report_text(const IdealReport& r) {
  std::ostringstream os;
  os << "backend " << r.backend << "\ngroup " << r.group.label() << "\nambient_dim " << r.ambient_dim << "\n";
  if (r.determined) {
    os << "ideal_dim " << r.ideal_dim << "\nquotient_dim " << r.quotient_dim << "\n";
  } else {
    os << "ideal_dim undetermined\nquotient_dim undetermined (at least " << r.quotient_basis.size() << ")\n";
  }
  os << "basis";
  for (auto& b : r.quotient_basis) os << " " << b;
  os << "\n";
  return os.str();
}

int cmd_group(const Options& o, const std::string& action, const std::string& name) {
  auto g = group_by_name(name);
  if (action == "info") {
    auto j = group_json(g);
    std::ostringstream os;
    os << "name " << g.label() << "\norder " << g.order() << "\nabelian " << (g.is_abelian() ? "yes" : "no")
       << "\nexponent " << g.exponent() << "\nclasses " << element_classes(g).count() << "\nsubgroup_classes "
       << lattice(g).class_count() << "\n";
    j["subgroup_classes"] = lattice(g).class_count();
    if (g.order() <= kCharacterTableMaxOrder) {
      j["characters"] = json::array();
      for (const auto& chi : character_table(g)) j["characters"].push_back(to_json(chi));
    }
    emit(o, j, os.str());
  } else if (action == "subgroups") {
    auto j = lattice_json(g);
    std::ostringstream os;
    os << lattice(g).count() << " subgroups in " << lattice(g).class_count() << " classes\n";
    for (auto& c : j["classes"])
      os << "L" << c["id"].get<int>() << " order " << c["order"].get<int>() << " length " << c["length"].get<int>()
         << " rep " << c["representative"].dump() << "\n";
    emit(o, j, os.str());
  } else if (action == "auts") {
    auto j = automorphisms_json(g);
    std::ostringstream os;
    os << "|Aut| " << j["aut"].get<int>() << "\n|Inn| " << j["inner"].get<int>() << "\n|Out| " << j["out"].get<int>()
       << "\n";
    emit(o, j, os.str());
  } else {
    return usage_error("group action must be info, subgroups or auts");
  }
  return 0;
}

int cmd_compose(const Options& o, const std::string& left, const std::string& mid, const std::string& right,
                const std::string& input, bool use_oracle) {
  auto h = group_by_name(left), g = group_by_name(mid), k = group_by_name(right);
  auto doc = read_json_input(input);
  require(doc.contains("x") && doc.contains("y"), ErrorCode::InvalidInput, "input needs \"x\" and \"y\"");
  auto x = burnside_from_json(doc["x"], h, g);
  auto y = burnside_from_json(doc["y"], g, k);
  auto z = use_oracle ? compose_oracle(x, y) : compose_bisets(x, y);
  emit(o, to_json(z), burnside_text(z));
  return 0;
}

int cmd_bouc(const Options& o, const std::string& left, const std::string& right, const std::string& sub) {
  auto h = group_by_name(left), g = group_by_name(right);
  auto p = direct_product(h, g);
  auto x = BisetClass::of(h, g, parse_subgroup(sub, p.group));
  auto w = bouc_decompose(x);
  bool ok = recompose(w.factors) == BurnsideElement(x);
  auto j = to_json(w);
  j["round_trip"] = ok;
  std::ostringstream os;
  os << "D = " << set_text(w.data.d) << "  C = " << set_text(w.data.c) << "\nB = " << set_text(w.data.b)
     << "  A = " << set_text(w.data.a) << "\n|D/C| = " << w.data.d_mod_c.group.order()
     << "  |B/A| = " << w.data.b_mod_a.group.order() << "\n";
  const char* names[] = {"Ind", "Inf", "Iso", "Def", "Res"};
  for (std::size_t i = 0; i < w.factors.size(); ++i)
    os << names[i] << " : " << w.factors[i].left.order() << " <- " << w.factors[i].right.order() << "\n";
  os << "round trip " << (ok ? "ok" : "FAILED") << "\n";
  emit(o, j, os.str());
  return ok ? 0 : 1;
}

int cmd_ahat(const Options& o, const std::string& backend, const std::string& name, const std::string& cname) {
  auto h = group_by_name(name);
  std::cerr << "bisetkit: spanning the ideal of " << backend << " at " << h.label() << "\n";
  IdealReport r;
  if (backend == "rb") {
    r = ideal_span(RBBackend{}, h);
  } else if (backend == "rq") {
    r = ideal_span(RQBackend{}, h);
  } else if (backend == "crc") {
    r = ideal_span(CRCBackend{}, h);
  } else if (backend == "rbc") {
    if (cname.empty()) return usage_error("--c is required for the rbc backend");
    r = rbc_ideal_report(h, group_by_name(cname));
  } else {
    return usage_error("unknown backend '" + backend + "' (rb, rq, crc, rbc)");
  }
  emit(o, to_json(r), report_text(r));
  return 0;
}

int cmd_lin_kernel(const Options& o, const std::string& name) {
  auto g = group_by_name(name);
  auto k = lin_kernel(g);
  json rows = json::array();
  std::ostringstream os;
  os << "dim " << k.size() << " in B(" << g.label() << ") of dim " << lattice(g).class_count() << "\n";
  for (auto& v : k) {
    json row = json::array();
    for (auto& q : v) {
      row.push_back(to_string(q));
      os << to_string(q) << " ";
    }
    os << "\n";
    rows.push_back(row);
  }
  emit(o, {{"group", g.label()}, {"burnside_dim", lattice(g).class_count()}, {"kernel_dim", k.size()}, {"basis", rows}},
       os.str());
  return 0;
}

int cmd_seeds(const Options& o, long max_m) {
  auto seeds = seeds_kRQ(max_m);
  std::vector<int> count(static_cast<std::size_t>(max_m) + 1, 0);
  for (auto& s : seeds) ++count[static_cast<std::size_t>(s.m)];
  json table = json::array(), list = json::array();
  std::ostringstream os;
  os << "m primitive\n";
  bool agree = true;
  for (long m = 1; m <= max_m; ++m) {
    int other = seed_count_by_ideal(m);
    agree = agree && other == count[static_cast<std::size_t>(m)];
    table.push_back({{"m", m}, {"count", count[static_cast<std::size_t>(m)]}});
    os << m << " " << count[static_cast<std::size_t>(m)] << "\n";
  }
  for (auto& s : seeds) list.push_back({{"m", s.m}, {"character", s.character}, {"key", s.key}});
  os << "total " << seeds.size() << "\n";
  emit(o, {{"max_m", max_m}, {"counts", table}, {"seeds", list}, {"consistent", agree}}, os.str());
  return agree ? 0 : 1;
}

int cmd_crc(const Options& o, const std::string& a, const std::string& b) {
  auto g = group_by_name(a), k = group_by_name(b);
  auto r = crc_product_span(g, k);
  std::ostringstream os;
  os << "product_rank " << r.product_rank << "\ntarget_dim " << r.target_dim << "\nmatch " << (r.match ? "yes" : "no")
     << "\n";
  emit(o, {{"G", g.label()}, {"K", k.label()}, {"product_rank", r.product_rank}, {"target_dim", r.target_dim},
           {"match", r.match}},
       os.str());
  return r.match ? 0 : 1;
}

int cmd_dress(const Options& o, const std::vector<std::string>& names, int xi, int yi, bool use_oracle) {
  auto g = group_by_name(names[0]), l = group_by_name(names[1]), k = group_by_name(names[2]),
       c = group_by_name(names[3]);
  auto pe = triple_product(g, l, c), pd = triple_product(l, k, c);
  auto xs = dress_transitive_classes(pe), ys = dress_transitive_classes(pd);
  if (xi >= 0 || yi >= 0) {
    if (xi < 0 || yi < 0) return usage_error("--x and --y must be given together");
    require(xi < static_cast<int>(xs.size()) && yi < static_cast<int>(ys.size()), ErrorCode::InvalidInput,
            "class index out of range");
    auto z = use_oracle ? dress_oracle(xs[xi], ys[yi]) : dress_compose(xs[xi], ys[yi]);
    std::ostringstream os;
    if (z.is_zero()) os << "0\n";
    for (const auto& [cls, q] : z.terms())
      os << to_string(q) << " * L" << cls << " order " << z.lattice_ref().class_rep(cls).size() << "\n";
    emit(o, to_json(z), os.str());
    return 0;
  }
  long pairs = 0, bad = 0;
  std::cerr << "bisetkit: " << xs.size() * ys.size() << " pairs\n";
  for (auto& x : xs)
    for (auto& y : ys) {
      ++pairs;
      if (!(dress_compose(x, y) == dress_oracle(x, y))) ++bad;
    }
  std::ostringstream os;
  os << pairs << " pairs checked against the oracle, " << bad << " mismatches\n";
  emit(o, {{"pairs", pairs}, {"mismatches", bad}}, os.str());
  return bad == 0 ? 0 : 1;
}

int cmd_no_bridge(const Options& o, const std::string& a, const std::string& b, const std::string& cn) {
  auto g = group_by_name(a), h = group_by_name(b), c = group_by_name(cn);
  std::cerr << "bisetkit: scanning subgroups of " << g.label() << " x " << h.label() << " x " << c.label() << "\n";
  auto r = no_bridge_check(g, h, c);
  emit(o, {{"G", g.label()}, {"H", h.label()}, {"C", c.label()}, {"bridges", r.bridges}},
       "no subgroup of " + g.label() + " x " + h.label() + " x " + c.label() +
           " has full projections and trivial k1, k2\n");
  return 0;
}

int cmd_counterexample(const Options& o) {
  std::cerr << "bisetkit: building D <= Q8 x D8 x C4\n";
  auto r = counterexample_check();
  std::ostringstream os;
  const auto& t = r.transcript;
  os << "G = " << t["groups"]["G"].get<std::string>() << ", H = " << t["groups"]["H"].get<std::string>()
     << ", C = " << t["groups"]["C"].get<std::string>() << "\n";
  os << "|T| = " << r.t_order << "\n";
  os << "Ker tau = <alpha^2 beta^2>, order " << r.kernel_order << "\n";
  os << "|D| = " << r.d_order << ", p1(D) = G, p2(D) = H: " << (r.projections_full ? "yes" : "no")
     << ", k1(D) = k2(D) = 1: " << (r.kernels_trivial ? "yes" : "no") << "\n";
  os << "elements (r, s, c) in D: " << r.generator_elements << "\n";
  os << "order-4 p3-injective candidates: " << r.order4_candidates << ", normal: " << r.normal_order4_candidates
     << "\n";
  os << "admissible kernels of index <= 7: " << r.admissible_at_7 << "\n";
  os << "factors through p1(D)/k1(D) of order 8: " << (r.factors_through_first ? "yes" : "no") << "\n";
  os << t["verdict"].get<std::string>() << "\n";
  emit(o, t, os.str());
  return 0;
}

int cmd_accept(const Options& o) {
  json results = json::array();
  int failed = 0;
  run_acceptance([&](const CriterionResult& r) {
    print_result(std::cerr, r);
    if (!o.json) print_result(std::cout, r);
    failed += !r.pass;
    results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  });
  if (o.json) std::cout << json{{"criteria", results}, {"failed", failed}}.dump(2) << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biset functors, Green functor quotients and the Yoneda-Dress construction"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--cache-dir", o.cache_dir, "Subgroup lattice cache (default $BISETKIT_CACHE or ./.bisetkit-cache)");
  app.add_option("--catalog", o.catalog, "JSON file of extra catalog entries");
  app.add_option("--order-bound", o.order_bound, "Largest group order to accept")->check(CLI::Range(1, 256));

  std::string action, name, name2, sub, backend, cname, left, mid, right, input = "-";
  std::vector<std::string> four;
  long max_m = 12;
  int xi = -1, yi = -1;
  bool oracle = false;

  auto* group = app.add_subcommand("group", "Group information");
  group->add_option("action", action, "info | subgroups | auts")->required()->check(CLI::IsMember({"info", "subgroups", "auts"}));
  group->add_option("name", name, "Group name")->required();

  auto* compose = app.add_subcommand("compose", "Compose biset elements read from JSON {\"x\": .., \"y\": ..}");
  compose->add_option("--left", left, "H")->required();
  compose->add_option("--mid", mid, "G")->required();
  compose->add_option("--right", right, "K")->required();
  compose->add_option("--input", input, "JSON file, - for stdin");
  compose->add_flag("--oracle", oracle, "Use the orbit oracle");

  auto* bouc = app.add_subcommand("bouc", "Bouc decomposition of (H x G)/L");
  bouc->add_option("left", name, "H")->required();
  bouc->add_option("right", name2, "G")->required();
  bouc->add_option("subgroup", sub, "comma-separated elements of H x G, or class:N")->required();

  auto* ahat = app.add_subcommand("ahat", "Dimension of the quotient A^(H)");
  ahat->add_option("--backend", backend, "rb | rq | crc | rbc")->required();
  ahat->add_option("--group", name, "H")->required();
  ahat->add_option("--c", cname, "C for the rbc backend");

  auto* link = app.add_subcommand("lin-kernel", "Kernel of linearization B(G) -> R_Q(G)");
  link->add_option("name", name, "G")->required();

  auto* seeds = app.add_subcommand("seeds", "Seeds (C_m, primitive character) for kR_Q");
  seeds->add_option("--max-m", max_m, "Largest m")->check(CLI::Range(1, 64));

  auto* crc = app.add_subcommand("crc-check", "Rank of products of irreducibles in CR_C(G x K)");
  crc->add_option("first", name, "G")->required();
  crc->add_option("second", name2, "K")->required();

  auto* dress = app.add_subcommand("dress-compose", "Composition in RB_C over (G, L, K, C)");
  dress->add_option("groups", four, "G L K C")->required()->expected(4);
  dress->add_option("--x", xi, "class of G x L x C");
  dress->add_option("--y", yi, "class of L x K x C");
  dress->add_flag("--oracle", oracle, "Use the orbit oracle");

  auto* bridge = app.add_subcommand("no-bridge", "Check that no D <= G x H x C has full projections and trivial kernels");
  bridge->add_option("first", name, "G")->required();
  bridge->add_option("second", name2, "H")->required();
  bridge->add_option("center", cname, "C of prime order")->required();

  auto* cex = app.add_subcommand("counterexample", "The Q8 / D8 / C4 example");
  auto* accept = app.add_subcommand("accept", "Run the acceptance suite");

  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--cache-dir" || a == "--order-bound" || a == "--catalog") {
      ++i;
      continue;
    }
    if (a.empty() || a[0] == '-') continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      std::cerr << "bisetkit: unknown subcommand '" << a << "'\n" << app.help();
      return 2;
    }
    break;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    if (o.cache_dir.empty()) {
      const char* env = std::getenv("BISETKIT_CACHE");
      o.cache_dir = env && *env ? env : "./.bisetkit-cache";
    }
    set_cache_dir(o.cache_dir);
    if (o.order_bound > 0) set_order_bound(o.order_bound);
    if (!o.catalog.empty()) load_catalog_overrides_file(o.catalog);

    if (*group) return cmd_group(o, action, name);
    if (*compose) return cmd_compose(o, left, mid, right, input, oracle);
    if (*bouc) return cmd_bouc(o, name, name2, sub);
    if (*ahat) return cmd_ahat(o, backend, name, cname);
    if (*link) return cmd_lin_kernel(o, name);
    if (*seeds) return cmd_seeds(o, max_m);
    if (*crc) return cmd_crc(o, name, name2);
    if (*dress) return cmd_dress(o, four, xi, yi, oracle);
    if (*bridge) return cmd_no_bridge(o, name, name2, cname);
    if (*cex) return cmd_counterexample(o);
    if (*accept) return cmd_accept(o);
  } catch (const Error& e) {
    std::cerr << "bisetkit: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::UnknownGroup || e.code() == ErrorCode::InvalidInput;
    return usage ? 2 : 1;
  }
  return usage_error("no subcommand");
}
