#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polarforge/betti.hpp"
#include "polarforge/core.hpp"
#include "polarforge/filtration.hpp"
#include "polarforge/io.hpp"
#include "polarforge/polarize.hpp"
#include "polarforge/random.hpp"
#include "polarforge/shift.hpp"

using namespace polarforge;
using nlohmann::json;

namespace {

// Input is a file path, "-" for stdin, or an inline ideal where ';'
// stands for a newline ("ring x y; x^2, x*y").
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (arg.rfind("ring ", 0) == 0 || arg.rfind("polar ", 0) == 0 ||
      arg.find(';') != std::string::npos) {
    std::string text = arg;
    for (auto& c : text)
      if (c == ';') c = '\n';
    return text;
  }
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open input file '" + arg + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MonomialIdeal load_ideal(const std::string& arg) {
  auto parsed = parse_ideal(read_input(arg));
  if (!parsed.input_was_minimal)
    std::cerr << "warning: input generators were not minimal; "
                 "using the minimal generating set\n";
  return parsed.ideal;
}

PolarizationSpec make_spec(const std::string& method, const std::string& A,
                           int d) {
  PolarizationSpec spec;
  if (method == "standard")
    spec.method = PolMethod::standard;
  else if (method == "box")
    spec.method = PolMethod::box;
  else if (method == "mixed")
    spec.method = PolMethod::mixed;
  else
    throw DomainError("unknown method '" + method + "'");
  if (!A.empty()) {
    std::istringstream as(A);
    std::string tok;
    while (std::getline(as, tok, ','))
      spec.A.push_back(std::stoi(tok));
  }
  spec.d = d;
  return spec;
}

void emit_ideal(const MonomialIdeal& I, const std::string& format) {
  if (format == "text")
    std::cout << serialize(I);
  else
    std::cout << to_json(I).dump(2) << "\n";
}

void emit_primes(const std::vector<MonomialPrime>& primes,
                 const std::string& format) {
  if (format == "text") {
    for (const auto& p : primes) std::cout << to_string(p) << "\n";
  } else {
    json arr = json::array();
    for (const auto& p : primes) arr.push_back(to_json(p));
    std::cout << arr.dump(2) << "\n";
  }
}

std::string kpoly_text(const KPolynomial& k) {
  if (k.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [deg, c] : k.coeffs) {
    long long a = c;
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    long long mag = a < 0 ? -a : a;
    if (deg == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += "t";
      if (deg > 1) out += "^" + deg.str();
    }
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"operations on monomial ideals: polarization, shifting, "
               "Betti numbers, Hilbert series, prime filtrations"};
  app.require_subcommand(1);

  std::string input, format = "json", method = "box", A, shift;
  int d = 0;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  int rn = 4, rdeg = 4, rgens = 4;

  auto add_common = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input)
      sub->add_option("input", input,
                      "ideal: a file path, '-' for stdin, or inline text "
                      "with ';' for newlines")
          ->required();
    sub->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    return sub;
  };
  auto add_pol = [&](CLI::App* sub) {
    sub->add_option("--method", method, "standard, box, or mixed");
    sub->add_option("--A", A, "boxed base indices for --method mixed, "
                              "comma separated, 1-based");
    sub->add_option("--d", d, "slot count (default: max generator degree)");
    return sub;
  };

  auto* c_pol = add_pol(add_common(app.add_subcommand(
      "polarize", "apply a polarization operator to an ideal")));
  auto* c_depol = add_common(app.add_subcommand(
      "depolarize", "erase slot indices of a bi-indexed ideal"));
  auto* c_sigma = add_common(app.add_subcommand(
      "sigma", "apply the generalized squarefree operation"));
  c_sigma->add_option("--shift", shift,
                      "shift sequence: 'id', 'flat', or '0,1,3,...'")
      ->required();
  auto* c_betti = add_common(app.add_subcommand(
      "betti", "graded Betti numbers via upper-Koszul homology"));
  c_betti->add_option("--threads", threads, "homology worker threads");
  auto* c_hilb = add_common(app.add_subcommand(
      "hilbert", "K-polynomial (Hilbert series numerator) of the quotient"));
  auto* c_filt = add_pol(add_common(app.add_subcommand(
      "filtration",
      "pretty clean prime filtration of the polarized quotient")));
  c_filt->add_option("--shift", shift,
                     "also push the filtration along this shift sequence");
  auto* c_verify = add_pol(add_common(app.add_subcommand(
      "verify", "check that the chosen operator gives a polarization")));
  c_verify->add_option("--threads", threads, "homology worker threads");
  auto* c_ass = add_pol(add_common(app.add_subcommand(
      "assoc-primes",
      "associated primes (squarefree input: minimal primes; otherwise of "
      "the polarized quotient via the filtration)")));
  auto* c_shell = add_pol(add_common(app.add_subcommand(
      "shelling",
      "shelling order of the polarized Stanley-Reisner complex")));
  auto* c_isb = add_common(app.add_subcommand(
      "is-borel", "test Borel fixedness; exit 1 with a witness move"));
  auto* c_clo = add_common(app.add_subcommand(
      "borel-closure", "smallest Borel fixed ideal containing the input"));
  auto* c_rand = add_common(
      app.add_subcommand("random-borel",
                         "random Borel fixed ideal (closure of random "
                         "monomials)"),
      false);
  c_rand->add_option("--seed", seed, "RNG seed")->required();
  c_rand->add_option("--n", rn, "number of variables");
  c_rand->add_option("--max-degree", rdeg, "max degree of seed monomials");
  c_rand->add_option("--gens", rgens, "number of seed monomials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  FieldSpec field = FieldSpec::from_env();

  if (c_pol->parsed()) {
    emit_ideal(apply_pol(load_ideal(input), make_spec(method, A, d)), format);
  } else if (c_depol->parsed()) {
    emit_ideal(depolarize(load_ideal(input)), format);
  } else if (c_sigma->parsed()) {
    auto I = load_ideal(input);
    Exp maxdeg = 0;
    for (const auto& g : I.gens())
      if (g.degree() > maxdeg) maxdeg = g.degree();
    if (maxdeg > 1000000) throw SizeError("sigma: generator degree too large");
    std::size_t len = std::max<std::size_t>(
        1, static_cast<std::size_t>(maxdeg));
    auto a = ShiftSequence::parse(shift, len, I.ring().size());
    bool collapsed = false;
    auto S = sigma_a_ideal(I, a, &collapsed);
    if (collapsed)
      std::cerr << "warning: images of distinct generators collapsed "
                   "(input is not Borel fixed)\n";
    emit_ideal(S, format);
  } else if (c_betti->parsed()) {
    auto t = betti_table(load_ideal(input), field, threads);
    if (format == "text") {
      for (const auto& [key, v] : t.entries)
        std::cout << "beta[" << key.first << "][" << key.second.str()
                  << "] = " << v << "\n";
    } else {
      std::cout << to_json(t).dump(2) << "\n";
    }
  } else if (c_hilb->parsed()) {
    auto k = k_polynomial(load_ideal(input));
    if (format == "text")
      std::cout << kpoly_text(k) << "\n";
    else
      std::cout << to_json(k).dump(2) << "\n";
  } else if (c_filt->parsed()) {
    auto I = load_ideal(input);
    auto spec = make_spec(method, A, d);
    if (spec.method == PolMethod::standard)
      throw DomainError("filtration: method must be box or mixed");
    auto F = pretty_clean_filtration(I, spec);
    if (format == "text") {
      std::cout << "polarized: " << serialize(F.polarized);
      for (const auto& s : F.steps)
        std::cout << "adjoin " << to_string(s.adjoined) << "  image "
                  << to_string(s.image) << "  prime " << to_string(s.prime)
                  << "  shift " << s.shift.str() << "\n";
      std::cout << "terminal: " << to_string(F.terminal) << "\n";
    } else {
      json j = to_json(F);
      if (!shift.empty()) {
        std::size_t dd = static_cast<std::size_t>(
            F.polarized.ring().slot_count());
        j["pushed"] = to_json(push_filtration(
            F, ShiftSequence::parse(shift, dd, I.ring().size())));
      }
      std::cout << j.dump(2) << "\n";
    }
    if (format == "text" && !shift.empty()) {
      std::size_t dd =
          static_cast<std::size_t>(F.polarized.ring().slot_count());
      auto P = push_filtration(
          F, ShiftSequence::parse(shift, dd, I.ring().size()));
      for (const auto& s : P.steps)
        std::cout << "pushed image " << to_string(s.image) << "  prime "
                  << to_string(s.prime) << "\n";
      std::cout << "pushed terminal: " << to_string(P.terminal) << "\n";
    }
  } else if (c_verify->parsed()) {
    auto I = load_ideal(input);
    auto spec = make_spec(method, A, d);
    auto r = verify_polarization(I, apply_pol(I, spec), field, threads);
    if (format == "text") {
      std::cout << "depolarizes: " << (r.depolarizes ? "yes" : "no") << "\n"
                << "hilbert equal: " << (r.hilbert_equal ? "yes" : "no")
                << "\n"
                << "betti equal: " << (r.betti_equal ? "yes" : "no") << "\n"
                << "polarization: " << (r.ok ? "yes" : "no") << "\n";
      if (r.witness)
        std::cout << "witness: beta[" << r.witness->i << "]["
                  << r.witness->j.str() << "] = " << r.witness->base_value
                  << " vs " << r.witness->polar_value << "\n";
    } else {
      std::cout << to_json(r).dump(2) << "\n";
    }
    if (!r.ok) return 1;
  } else if (c_ass->parsed()) {
    auto I = load_ideal(input);
    bool squarefree = true;
    for (const auto& g : I.gens())
      if (!g.is_squarefree()) squarefree = false;
    if (squarefree) {
      emit_primes(minimal_primes_squarefree(I), format);
    } else {
      auto spec = make_spec(method, A, d);
      if (spec.method == PolMethod::standard)
        throw DomainError("assoc-primes: method must be box or mixed");
      emit_primes(ass_from_filtration(pretty_clean_filtration(I, spec)),
                  format);
    }
  } else if (c_shell->parsed()) {
    auto I = load_ideal(input);
    auto spec = make_spec(method, A, d);
    if (spec.method == PolMethod::standard)
      throw DomainError("shelling: method must be box or mixed");
    auto F = pretty_clean_filtration(I, spec);
    auto facets = shelling_order(F);
    const Ring& t = F.polarized.ring();
    if (format == "text") {
      for (const auto& f : facets) {
        std::string line;
        for (auto v : f) {
          if (!line.empty()) line += " ";
          line += t.var(v).name;
        }
        std::cout << "{" << line << "}\n";
      }
    } else {
      json arr = json::array();
      for (const auto& f : facets) {
        json facet = json::array();
        for (auto v : f) facet.push_back(t.var(v).name);
        arr.push_back(facet);
      }
      std::cout << arr.dump(2) << "\n";
    }
  } else if (c_isb->parsed()) {
    auto I = load_ideal(input);
    auto w = borel_violation(I);
    if (format == "text") {
      std::cout << (w ? "not borel fixed" : "borel fixed") << "\n";
      if (w)
        std::cout << "witness: (" << I.ring().var(w->to_index - 1).name << "/"
                  << I.ring().var(w->from_index - 1).name << ") * "
                  << to_string(w->generator) << " is outside the ideal\n";
    } else {
      json j;
      j["borel_fixed"] = !w.has_value();
      if (w)
        j["witness"] = {{"generator", to_string(w->generator)},
                        {"from", w->from_index},
                        {"to", w->to_index}};
      std::cout << j.dump(2) << "\n";
    }
    if (w) return 1;
  } else if (c_clo->parsed()) {
    auto I = load_ideal(input);
    emit_ideal(borel_closure(I.ring(), I.gens()), format);
  } else if (c_rand->parsed()) {
    std::mt19937_64 rng(seed);
    RandomBorelParams params;
    params.nvars = rn;
    params.max_degree = rdeg;
    params.seed_count = rgens;
    emit_ideal(random_borel_ideal(rng, params), format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.line > 0)
      std::cerr << " (line " << e.line << ", column " << e.column << ")";
    std::cerr << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
