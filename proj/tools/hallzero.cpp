/*
   Copyright 2026 The hallzero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// hallzero: command-line front end for partitions, the degeneration order,
// the degenerate Hall algebra and the finite-field Hall number oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hallzero/hallzero.hpp"

namespace {

using hallzero::H0Element;
using hallzero::Integer;
using hallzero::Partition;
using json = nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

struct Output {
  std::string text;
  json doc;
  int code = kOk;
};

json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

json to_json(const Partition& p) { return hallzero::format(p); }

json to_json(const H0Element& x) {
  json terms = json::array();
  for (const auto& [p, c] : x.terms()) terms.push_back({{"partition", hallzero::format(p)}, {"coeff", to_json(c)}});
  return terms;
}

Partition arg_partition(const std::string& text) {
  try {
    return hallzero::parse(text);
  } catch (const hallzero::ParseError& e) {
    throw CLI::ValidationError("partition '" + text + "'", e.what());
  } catch (const std::exception& e) {
    throw CLI::ValidationError("partition '" + text + "'", e.what());
  }
}

Output partition_result(const Partition& p) {
  return {hallzero::format(p) + "\n", {{"result", to_json(p)}}};
}

Output h0_result(const H0Element& x) {
  return {hallzero::format(x) + "\n", {{"terms", to_json(x)}}};
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

Output poset_command(int n, const std::string& dot_file, const std::string& cache_dir_arg) {
  std::filesystem::path cache_dir =
      cache_dir_arg.empty() ? hallzero::default_cache_dir() : std::filesystem::path(cache_dir_arg);
  std::shared_ptr<const hallzero::DegPoset> poset;
  std::string cache_note = "none";
  if (!cache_dir.empty()) {
    try {
      hallzero::PosetCache cache(cache_dir);
      poset = cache.get(n);
      cache_note = (cache_dir / ("degposet-" + std::to_string(n) + ".txt")).string();
    } catch (const std::filesystem::filesystem_error& e) {
      std::cerr << "warning: poset cache unavailable (" << e.what() << ")\n";
    } catch (const std::ios_base::failure& e) {
      std::cerr << "warning: poset cache unavailable (" << e.what() << ")\n";
    } catch (const std::runtime_error& e) {
      std::cerr << "warning: poset cache unavailable (" << e.what() << ")\n";
    }
  }
  if (!poset) poset = std::make_shared<const hallzero::DegPoset>(hallzero::build_poset(n));

  if (!dot_file.empty()) {
    std::ofstream out(dot_file);
    if (!out) throw std::runtime_error("cannot write " + dot_file);
    out << hallzero::to_dot(*poset);
  }

  const auto edges = hallzero::hasse_edges(*poset);
  const std::size_t size = poset->size();
  std::ostringstream os;
  os << "weight " << n << ": " << size << " partitions, " << edges.size() << " covering relations\n";
  os << "elements:\n";
  for (std::size_t i = 0; i < size; ++i) os << "  " << i << " " << hallzero::format(poset->element(i)) << '\n';
  os << "covers:\n";
  for (const auto& [a, b] : edges) os << "  " << hallzero::format(a) << " < " << hallzero::format(b) << '\n';
  json zeta = json::array();
  json moebius = json::array();
  os << "zeta:\n";
  for (std::size_t i = 0; i < size; ++i) {
    json row = json::array();
    os << " ";
    for (std::size_t j = 0; j < size; ++j) {
      const int z = poset->zeta(i, j) ? 1 : 0;
      row.push_back(z);
      os << ' ' << z;
    }
    os << '\n';
    zeta.push_back(row);
  }
  os << "moebius:\n";
  for (std::size_t i = 0; i < size; ++i) {
    json row = json::array();
    os << " ";
    for (std::size_t j = 0; j < size; ++j) {
      const auto m = poset->moebius(i, j);
      row.push_back(m);
      os << ' ' << m;
    }
    os << '\n';
    moebius.push_back(row);
  }
  os << "cache: " << cache_note << '\n';
  if (!dot_file.empty()) os << "dot: " << dot_file << '\n';

  json elements = json::array();
  for (const auto& p : poset->elements()) elements.push_back(to_json(p));
  json covers = json::array();
  for (const auto& [a, b] : edges) covers.push_back({to_json(a), to_json(b)});
  json doc{{"n", n},          {"elements", elements}, {"covers", covers},
           {"zeta", zeta},    {"moebius", moebius},   {"cache", cache_note}};
  if (!dot_file.empty()) doc["dot"] = dot_file;
  return {os.str(), doc};
}

Output hallpoly_command(const Partition& a, const Partition& b, const Partition& g) {
  try {
    const auto fit = hallzero::interpolate_hall_poly_fit(a, b, g);
    json coeffs = json::array();
    for (const auto& c : fit.poly.coeffs()) coeffs.push_back(to_json(c));
    json samples = json::array();
    for (const auto& [p, count] : fit.samples) samples.push_back({{"p", p}, {"count", count}});
    return {hallzero::format(fit.poly) + "\n",
            {{"coeffs", coeffs},
             {"text", hallzero::format(fit.poly)},
             {"degree_budget", fit.degree_budget},
             {"samples", samples},
             {"validation", {{"p", fit.validation.first}, {"count", fit.validation.second}}}}};
  } catch (const hallzero::Infeasible& e) {
    return {"infeasible\n", {{"infeasible", true}, {"reason", e.what()}}, kCapExceeded};
  }
}

Output verify_command(int max_weight) {
  if (max_weight < 0) throw CLI::ValidationError("--max-weight", "must be non-negative");
  const auto reports = hallzero::verify_all(max_weight);
  std::ostringstream os;
  json checks = json::array();
  bool ok = true;
  os << "verification up to weight " << max_weight << '\n';
  for (const auto& r : reports) {
    os << (r.passed() ? "PASS " : "FAIL ") << pad(r.name, 30) << lpad(std::to_string(r.cases), 8)
       << " cases";
    if (r.skipped > 0) os << ", " << r.skipped << " skipped (oracle budget)";
    if (!r.passed()) os << ", " << r.failures << " failed; first: " << r.first_failure;
    os << '\n';
    json item{{"name", r.name}, {"passed", r.passed()}, {"cases", r.cases}, {"failures", r.failures}, {"skipped", r.skipped}};
    if (!r.passed()) item["first_failure"] = r.first_failure;
    checks.push_back(item);
    ok = ok && r.passed();
  }
  os << (ok ? "all checks passed" : "verification FAILED") << '\n';
  return {os.str(), {{"max_weight", max_weight}, {"passed", ok}, {"checks", checks}},
          ok ? kOk : kVerificationFailed};
}

Output example_command() {
  struct Step {
    Partition alpha;
    Partition beta;
    std::vector<Partition> gammas;
  };
  const auto P = [](const char* s) { return hallzero::parse(s); };
  const std::vector<Step> steps{
      {P("(1^3)"), P("(1^2)"), {P("(1^5)"), P("(2,1^3)"), P("(2^2,1)")}},
      {P("(1^3)"), P("(2)"), {P("(3,1^2)"), P("(2,1^3)")}},
      {P("(2,1)"), P("(1^2)"), {P("(2,1^3)"), P("(2^2,1)"), P("(3,1^2)"), P("(3,2)")}},
      {P("(2,1)"), P("(2)"), {P("(2^2,1)"), P("(3,2)"), P("(4,1)"), P("(3,1^2)")}},
  };
  std::ostringstream os;
  json doc_steps = json::array();
  os << "Constant terms phi_{alpha beta}^gamma(0) via F(M(alpha)) F(M(beta)) = F(M(alpha + beta))\n";
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& st = steps[s];
    const auto generic = hallzero::generic_extension(st.alpha, st.beta);
    const auto fexp = hallzero::f_map(generic);
    os << "\nStep " << s + 1 << ": F(M" << hallzero::format(st.alpha) << ") F(M" << hallzero::format(st.beta)
       << ") = F(M" << hallzero::format(generic) << ")\n";
    os << "  F(M" << hallzero::format(generic) << ") = " << hallzero::format(fexp) << '\n';
    os << "  " << pad("alpha", 8) << pad("beta", 8) << pad("gamma", 10) << lpad("phi(0)", 6) << '\n';
    json rows = json::array();
    for (const auto& g : st.gammas) {
      const Integer c = hallzero::constant_term(st.alpha, st.beta, g);
      os << "  " << pad(hallzero::format(st.alpha), 8) << pad(hallzero::format(st.beta), 8)
         << pad(hallzero::format(g), 10) << lpad(c.str(), 6) << '\n';
      rows.push_back({{"gamma", to_json(g)}, {"value", to_json(c)}});
    }
    doc_steps.push_back({{"step", s + 1},
                         {"alpha", to_json(st.alpha)},
                         {"beta", to_json(st.beta)},
                         {"generic_extension", to_json(generic)},
                         {"f_expansion", to_json(fexp)},
                         {"constant_terms", rows}});
  }
  return {os.str(), {{"steps", doc_steps}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Partitions, degenerations and constant terms of Hall polynomials.\n"
      "Partitions are written as 3,1,1 or in exponent form (3,1^2); quote the\n"
      "parentheses in the shell, e.g. hallzero conj \"(3,1^2)\"."};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a single JSON document");

  Output out;
  std::string p1, p2, p3;

  auto* conj = app.add_subcommand("conj", "Conjugate (dual) partition");
  conj->add_option("partition", p1)->required();
  conj->callback([&] { out = partition_result(hallzero::conjugate(arg_partition(p1))); });

  auto* add = app.add_subcommand("add", "Componentwise sum");
  add->add_option("lambda", p1)->required();
  add->add_option("nu", p2)->required();
  add->callback([&] { out = partition_result(hallzero::add(arg_partition(p1), arg_partition(p2))); });

  auto* uni = app.add_subcommand("union", "Union of the multisets of parts");
  uni->add_option("lambda", p1)->required();
  uni->add_option("nu", p2)->required();
  uni->callback([&] { out = partition_result(hallzero::unite(arg_partition(p1), arg_partition(p2))); });

  auto* degle = app.add_subcommand("degle", "Is M(lambda) <=_deg M(nu)?");
  degle->add_option("lambda", p1)->required();
  degle->add_option("nu", p2)->required();
  degle->callback([&] {
    const bool r = hallzero::leq_deg(arg_partition(p1), arg_partition(p2));
    out = {r ? "true\n" : "false\n", {{"result", r}}};
  });

  int weight = 0;
  std::string dot_file;
  std::string cache_dir;
  auto* poset = app.add_subcommand("poset", "Degeneration poset of a weight (zeta, Moebius, Hasse covers)");
  poset->add_option("n", weight)->required()->check(CLI::NonNegativeNumber);
  poset->add_option("--dot", dot_file, "Write the Hasse diagram in Graphviz format");
  poset->add_option("--cache-dir", cache_dir, "Poset cache directory (default: $HALLZERO_CACHE_DIR)");
  poset->callback([&] { out = poset_command(weight, dot_file, cache_dir); });

  auto* genext = app.add_subcommand("genext", "Generic extension M(nu) * M(mu) = M(nu + mu)");
  genext->add_option("nu", p1)->required();
  genext->add_option("mu", p2)->required();
  genext->callback([&] {
    out = partition_result(hallzero::generic_extension(arg_partition(p1), arg_partition(p2)));
  });

  auto* fmap = app.add_subcommand("fmap", "F(M(alpha)) in the basis u of H_0");
  fmap->add_option("alpha", p1)->required();
  fmap->callback([&] { out = h0_result(hallzero::f_map(arg_partition(p1))); });

  auto* h0mul = app.add_subcommand("h0mul", "Product u_alpha u_beta in H_0");
  h0mul->add_option("alpha", p1)->required();
  h0mul->add_option("beta", p2)->required();
  h0mul->callback([&] { out = h0_result(hallzero::basis_product(arg_partition(p1), arg_partition(p2))); });

  auto* cterm = app.add_subcommand("const", "Constant term phi_{alpha beta}^gamma(0)");
  cterm->add_option("alpha", p1)->required();
  cterm->add_option("beta", p2)->required();
  cterm->add_option("gamma", p3)->required();
  cterm->callback([&] {
    const Integer c = hallzero::constant_term(arg_partition(p1), arg_partition(p2), arg_partition(p3));
    out = {c.str() + "\n", {{"result", to_json(c)}}};
  });

  int prime = 2;
  auto* hallnum = app.add_subcommand("hallnum", "Number of submodules of M(gamma) of type beta, cotype alpha");
  hallnum->add_option("gamma", p1)->required();
  hallnum->add_option("alpha", p2)->required();
  hallnum->add_option("beta", p3)->required();
  hallnum->add_option("--p", prime, "Prime field size (2, 3, 5, 7, 11, 13)")->required();
  hallnum->callback([&] {
    try {
      const auto c = hallzero::hall_number(arg_partition(p1), arg_partition(p2), arg_partition(p3), prime);
      out = {std::to_string(c) + "\n", {{"result", c}}};
    } catch (const hallzero::CapExceeded&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--p", e.what());
    }
  });

  auto* hallpoly = app.add_subcommand("hallpoly", "Hall polynomial by interpolation of oracle counts");
  hallpoly->add_option("alpha", p1)->required();
  hallpoly->add_option("beta", p2)->required();
  hallpoly->add_option("gamma", p3)->required();
  hallpoly->callback([&] { out = hallpoly_command(arg_partition(p1), arg_partition(p2), arg_partition(p3)); });

  int max_weight = 5;
  auto* verify = app.add_subcommand("verify", "Run the cross-check suite");
  verify->add_option("--max-weight", max_weight, "Largest weight to check (default 5)");
  verify->callback([&] { out = verify_command(max_weight); });

  auto* example = app.add_subcommand("example", "Reproduce the worked example (H_0 constant terms)");
  example->callback([&] { out = example_command(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const hallzero::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const hallzero::ConsistencyError& e) {
    std::cerr << "error: internal consistency check failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }

  if (as_json) {
    std::cout << out.doc.dump(2) << '\n';
  } else {
    std::cout << out.text;
  }
  return out.code;
}
