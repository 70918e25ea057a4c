// Command-line surface for the hypergraph calculus library: closures,
// constrained (co)homology, Koszul reports, Mayer-Vietoris verification,
// persistence barcodes and random models.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hx/hx.hpp"

namespace {

// exit codes: 0 ok, 2 parse, 3 precondition, 4 verification
struct verification_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoeffMode {
  bool rational = false;
  uint64_t p = 65521;
};

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoeffMode parse_coeff(const std::string& s) {
  CoeffMode m;
  if (s == "rational") {
    m.rational = true;
    return m;
  }
  if (s.rfind("gf:", 0) == 0) {
    try {
      m.p = std::stoull(s.substr(3));
    } catch (const std::exception&) {
      throw hx::precondition_error("bad coefficient mode '" + s + "'");
    }
    if (m.p == 2 || !is_prime(m.p))
      throw hx::precondition_error("gf modulus must be an odd prime, got " + s.substr(3));
    return m;
  }
  throw hx::precondition_error("coefficient mode must be 'rational' or 'gf:p', got '" + s + "'");
}

template <class Fn>
void with_field(const CoeffMode& mode, Fn&& fn) {
  if (mode.rational) {
    fn(hx::Rat{});
  } else {
    hx::set_gf_modulus(mode.p);
    fn(hx::Gf{});
  }
}

hx::Hypergraph read_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hx::precondition_error("cannot open '" + path + "'");
  return hx::parse_hypergraph(in);
}

hx::Filtration read_filtration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hx::precondition_error("cannot open '" + path + "'");
  return hx::parse_filtration(in);
}

std::pair<long, long> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw hx::precondition_error("range must look like a..b, got '" + s + "'");
  try {
    long a = std::stol(s.substr(0, dots));
    long b = std::stol(s.substr(dots + 2));
    if (b < a) throw hx::precondition_error("empty range '" + s + "'");
    return {a, b};
  } catch (const hx::precondition_error&) {
    throw;
  } catch (const std::exception&) {
    throw hx::precondition_error("range must look like a..b, got '" + s + "'");
  }
}

hx::Probability parse_probability(const std::string& s) {
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      boost::multiprecision::cpp_int num(digits.empty() ? "0" : digits), den = 1;
      for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      return hx::Probability(num, den);
    }
    auto slash = s.find('/');
    if (slash == std::string::npos) return hx::Probability(boost::multiprecision::cpp_int(s));
    return hx::Probability(boost::multiprecision::cpp_int(s.substr(0, slash)),
                           boost::multiprecision::cpp_int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw hx::precondition_error("bad probability '" + s + "'");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact discrete differential calculus on hypergraphs"};
  app.require_subcommand(1);

  const char* env_coeff = std::getenv("HG_COEFF");
  std::string coeff = env_coeff ? env_coeff : "gf:65521";

  // closure
  auto* c_closure = app.add_subcommand("closure", "Closure operators and the complement");
  std::string cl_input, cl_kind;
  c_closure->add_option("input", cl_input, ".hg file")->required();
  c_closure
      ->add_option("--kind", cl_kind, "delta | Delta | bar-delta | bar-Delta | complement")
      ->required();
  c_closure->callback([&] {
    hx::Hypergraph h = read_hypergraph(cl_input);
    hx::Hypergraph out = cl_kind == "complement"
                             ? hx::complement(h)
                             : hx::apply_closure(h, hx::parse_closure_kind(cl_kind));
    std::cout << hx::serialize_hypergraph(out);
  });

  // homology
  auto* c_hom = app.add_subcommand("homology", "Constrained and localized (co)homology");
  std::string h_input, h_op, h_range, h_coeff = coeff, h_weights, h_part, h_variance = "lower";
  long h_m = 0;
  c_hom->add_option("input", h_input, ".hg file")->required();
  c_hom->add_option("--op", h_op, "operator expression, e.g. \"p(v0)+p(v1)\"");
  c_hom->add_option("--m", h_m, "anchor degree");
  c_hom->add_option("--range", h_range, "index range a..b (default: every index)");
  c_hom->add_option("--coeff", h_coeff, "rational | gf:p");
  c_hom->add_option("--weights", h_weights, "weight file for localized mode");
  c_hom->add_option("--part", h_part, "vertex partition file for localized mode");
  c_hom->add_option("--variance", h_variance, "lower | upper (localized mode)");
  c_hom->callback([&] {
    hx::Hypergraph h = read_hypergraph(h_input);
    bool localized = !h_part.empty();
    if (localized && h_weights.empty())
      throw hx::precondition_error("--part needs --weights");
    if (!localized && h_op.empty())
      throw hx::precondition_error("--op is required unless --part is given");
    with_field(parse_coeff(h_coeff), [&](auto tag) {
      using F = decltype(tag);
      hx::json out;
      out["coeff"] = h_coeff;
      auto results_for = [&](const hx::ConstrainedComplex<F>& cc) {
        long lo = 0, hi = static_cast<long>(cc.node_count()) - 1;
        if (!h_range.empty()) std::tie(lo, hi) = parse_range(h_range);
        hx::json results = hx::json::array();
        for (long n = lo; n <= hi; ++n)
          results.push_back(
              hx::homology_json(hx::homology(cc, static_cast<size_t>(n)), h.ambient()));
        return results;
      };
      if (!localized) {
        hx::ExtOperator<F> op = hx::parse_operator<F>(h_op, h.ambient());
        hx::ConstrainedComplex<F> cc = op.variance() == hx::Variance::lower
                                           ? hx::constrained_complex(h, op, h_m)
                                           : hx::constrained_cocomplex(h, op, h_m);
        out["results"] = results_for(cc);
      } else {
        std::ifstream win(h_weights), pin(h_part);
        if (!win) throw hx::precondition_error("cannot open '" + h_weights + "'");
        if (!pin) throw hx::precondition_error("cannot open '" + h_part + "'");
        auto w = hx::parse_weights<F>(win, h.ambient());
        auto blocks = hx::parse_partition(pin, h.ambient());
        hx::Variance var =
            h_variance == "upper" ? hx::Variance::upper : hx::Variance::lower;
        hx::json jblocks = hx::json::array();
        for (const auto& block : blocks) {
          hx::json names = hx::json::array();
          for (int v : block) names.push_back(h.ambient().name(v));
          hx::ExtOperator<F> op = hx::localized_operator(w, block, var);
          hx::ConstrainedComplex<F> cc = var == hx::Variance::lower
                                             ? hx::constrained_complex(h, op, h_m)
                                             : hx::constrained_cocomplex(h, op, h_m);
          jblocks.push_back({{"block", names}, {"results", results_for(cc)}});
        }
        out["blocks"] = jblocks;
      }
      std::cout << out.dump(2) << '\n';
    });
  });

  // koszul
  auto* c_kos = app.add_subcommand("koszul", "Koszul complex exactness report");
  std::string k_input, k_weights, k_variance = "lower", k_coeff = coeff;
  c_kos->add_option("input", k_input, ".hg file")->required();
  c_kos->add_option("--weights", k_weights, "weight file")->required();
  c_kos->add_option("--variance", k_variance, "lower | upper");
  c_kos->add_option("--coeff", k_coeff, "rational | gf:p");
  c_kos->callback([&] {
    hx::Hypergraph h = read_hypergraph(k_input);
    hx::Variance var = k_variance == "upper" ? hx::Variance::upper : hx::Variance::lower;
    with_field(parse_coeff(k_coeff), [&](auto tag) {
      using F = decltype(tag);
      std::ifstream win(k_weights);
      if (!win) throw hx::precondition_error("cannot open '" + k_weights + "'");
      auto w = hx::parse_weights<F>(win, h.ambient());
      auto gens = var == hx::Variance::lower ? hx::admissible_lower_vertices(h)
                                             : hx::admissible_upper_vertices(h);
      std::cout << (var == hx::Variance::lower ? "admissible (lower):" : "admissible (upper):");
      for (int v : gens) std::cout << ' ' << h.ambient().name(v);
      std::cout << '\n';
      auto complex = hx::build_koszul_complex(h, w, var);
      if (complex.nodes.empty()) {
        std::cout << "trivial complex\n";
        return;
      }
      auto rep = hx::check_exactness(complex);
      for (size_t n = 0; n < complex.nodes.size(); ++n)
        std::cout << "node " << n << " dim " << complex.nodes[n].dim << " defect "
                  << rep.nodes[n].defect << '\n';
      std::cout << "exact: " << (rep.all_exact() ? "yes" : "no") << '\n';
      for (const auto& op : hx::koszul_kernel_generators(complex, 1, var))
        std::cout << "kernel generator (degree 1): " << hx::format_operator(op, h.ambient())
                  << '\n';
    });
  });

  // mv
  auto* c_mv = app.add_subcommand("mv", "Mayer-Vietoris ladder verification");
  std::string mv_a, mv_b, mv_op, mv_coeff = coeff;
  long mv_m = 0;
  c_mv->add_option("--a", mv_a, "first .hg file")->required();
  c_mv->add_option("--b", mv_b, "second .hg file")->required();
  c_mv->add_option("--op", mv_op, "operator expression")->required();
  c_mv->add_option("--m", mv_m, "anchor degree");
  c_mv->add_option("--coeff", mv_coeff, "rational | gf:p");
  c_mv->callback([&] {
    hx::Hypergraph a = read_hypergraph(mv_a), b = read_hypergraph(mv_b);
    if (!(a.ambient() == b.ambient()))
      throw hx::precondition_error("vertex headers of the two files differ");
    with_field(parse_coeff(mv_coeff), [&](auto tag) {
      using F = decltype(tag);
      hx::ExtOperator<F> op = hx::parse_operator<F>(mv_op, a.ambient());
      hx::MVLadder<F> ladder = hx::mv_hypergraph(a, b, op, mv_m);
      hx::json out = hx::ladder_json(ladder);
      std::cout << out.dump(2) << '\n';
      if (!out["verdicts"]["exact"].template get<bool>() ||
          !out["verdicts"]["commuting"].template get<bool>())
        throw verification_failure("Mayer-Vietoris verification failed");
    });
  });

  // persist
  auto* c_per = app.add_subcommand("persist", "Persistence barcodes");
  std::string p_flt, p_closure, p_op, p_range, p_out, p_format = "json", p_coeff = coeff;
  long p_m = 0;
  bool p_verify = false;
  c_per->add_option("--filtration", p_flt, ".flt file")->required();
  c_per->add_option("--closure", p_closure, "delta | Delta | bar-delta | bar-Delta");
  c_per->add_option("--op", p_op, "operator expression")->required();
  c_per->add_option("--m", p_m, "anchor degree");
  c_per->add_option("--range", p_range, "bar index range a..b");
  c_per->add_option("--out", p_out, "output path (default stdout)");
  c_per->add_option("--format", p_format, "json | tsv");
  c_per->add_option("--coeff", p_coeff, "rational | gf:p");
  c_per->add_flag("--verify", p_verify, "cross-check bars against the rank oracle");
  c_per->callback([&] {
    hx::Filtration f = read_filtration(p_flt);
    if (!p_closure.empty()) f = hx::derived_filtration(f, hx::parse_closure_kind(p_closure));
    with_field(parse_coeff(p_coeff), [&](auto tag) {
      using F = decltype(tag);
      hx::ExtOperator<F> op = hx::parse_operator<F>(p_op, f.ambient);
      hx::Barcode bc = hx::persistent_homology(f, op, p_m);
      if (!p_range.empty()) {
        auto [lo, hi] = parse_range(p_range);
        hx::Barcode filtered;
        for (const auto& bar : bc.bars)
          if (bar.index >= lo && bar.index <= hi) filtered.bars.push_back(bar);
        bc = filtered;
      }
      std::string text =
          p_format == "tsv" ? hx::barcode_tsv(bc) : hx::barcode_json(bc).dump(2) + "\n";
      if (p_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(p_out);
        if (!out) throw hx::precondition_error("cannot open '" + p_out + "' for writing");
        out << text;
      }
      if (p_verify) {
        auto criticals = f.critical_values();
        long max_index = 0;
        for (const auto& bar : bc.bars) max_index = std::max(max_index, bar.index);
        for (size_t i = 0; i < criticals.size(); ++i)
          for (size_t j = i; j < criticals.size(); ++j)
            for (long n = 0; n <= max_index; ++n) {
              size_t bars = bc.bars_containing(n, criticals[i], criticals[j]);
              size_t rank = hx::persistence_rank(f, op, p_m, static_cast<size_t>(n),
                                                 criticals[i], criticals[j]);
              if (bars != rank)
                throw verification_failure(
                    "bar count " + std::to_string(bars) + " != rank " + std::to_string(rank) +
                    " at index " + std::to_string(n) + " over [" + hx::birth_str(criticals[i]) +
                    ", " + hx::birth_str(criticals[j]) + "]");
            }
        std::cerr << "verified\n";
      }
    });
  });

  // random
  auto* c_rnd = app.add_subcommand("random", "Random hypergraph models");
  int r_vertices = 0;
  std::string r_p, r_model = "bar-p";
  uint64_t r_seed = 0;
  c_rnd->add_option("--vertices", r_vertices, "ambient size")->required();
  c_rnd->add_option("--p", r_p, "edge probability in [0,1]")->required();
  c_rnd->add_option("--model", r_model, "bar-p | p-complex | q-independence");
  c_rnd->add_option("--seed", r_seed, "random seed");
  c_rnd->callback([&] {
    if (r_vertices < 0) throw hx::precondition_error("--vertices must be non-negative");
    std::string norm = r_model;
    for (auto& ch : norm)
      if (ch == '-') ch = '_';
    hx::RandomModel model = hx::parse_random_model(norm);
    std::vector<std::string> names;
    for (int i = 0; i < r_vertices; ++i) names.push_back("v" + std::to_string(i));
    hx::VertexTable table(names);
    hx::Hypergraph h = hx::sample_random(table, parse_probability(r_p), model, r_seed);
    std::cout << hx::serialize_hypergraph(h);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hx::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const hx::expr_error& e) {
    std::cerr << "expression error:\n" << e.what() << '\n';
    return 2;
  } catch (const verification_failure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 4;
  } catch (const hx::precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
