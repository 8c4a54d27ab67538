#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "afdim/classify.hpp"
#include "afdim/errors.hpp"
#include "afdim/finitering.hpp"
#include "afdim/json.hpp"
#include "afdim/numtheory.hpp"
#include "afdim/quadorder.hpp"
#include "afdim/ringformat.hpp"

namespace {

using nlohmann::json;

void emit(const json& j, const std::string& format) {
  if (format == "table") {
    // Flattened key/value rows, aligned on the key column.
    auto flat = j.flatten();
    std::size_t width = 0;
    for (auto it = flat.begin(); it != flat.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = flat.begin(); it != flat.end(); ++it) {
      std::string key = it.key();
      std::cout << key << std::string(width - key.size() + 2, ' ') << it.value().dump() << "\n";
    }
  } else {
    std::cout << j.dump() << "\n";
  }
}

afdim::FiniteRing load_ring(const std::string& path) {
  if (path == "-" || path.empty()) return afdim::parse_ring(std::cin);
  std::ifstream in(path);
  if (!in) throw afdim::domain_error("cannot open ring file: " + path);
  return afdim::parse_ring(in);
}

std::vector<afdim::FiniteFieldDesc> parse_fields(const std::string& text) {
  std::vector<afdim::FiniteFieldDesc> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    afdim::FiniteFieldDesc f;
    auto caret = item.find('^');
    f.p = std::stoll(item.substr(0, caret));
    f.k = caret == std::string::npos ? 1 : std::stoi(item.substr(caret + 1));
    out.push_back(f);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw afdim::domain_error("range must be lo:hi");
  return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
}

int run(int argc, char** argv) {
  CLI::App app{"Classification of quadratic orders by AF-dimension, with a "
               "finite-ring engine for brute-force verification"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::int64_t n = 0, r = 1, p = 2;
  int cap_omega = 12, cap_afdim = 6, margin = 2;
  std::uint64_t quotient_bound = 65536;
  std::string ring_path = "-";
  std::vector<std::string> gen_args;
  std::string a_fields_arg, b_fields_arg, map_arg;
  std::string n_range_arg, r_range_arg = "1:1";

  auto* classify = app.add_subcommand("classify", "Closed-form report for the order Z[r*omega_n]");
  classify->add_option("-n", n, "Squarefree n, not 0 or 1")->required();
  classify->add_option("-r", r, "Conductor multiplier r >= 1")->required();

  auto* split = app.add_subcommand("split", "Splitting of a rational prime in Z[omega_n]");
  split->add_option("-n", n, "Squarefree n, not 0 or 1")->required();
  split->add_option("-p", p, "Rational prime")->required();

  auto* omega_cmd = app.add_subcommand("omega", "Omega of an ideal of a finite ring");
  omega_cmd->add_option("ring", ring_path, "Ring file in the text format, or - for stdin");
  omega_cmd->add_option("--gen", gen_args, "Ideal generator as comma-separated coordinates");
  omega_cmd->add_option("--cap-omega", cap_omega, "Search cap");

  auto* afdim_cmd = app.add_subcommand("afdim-finite", "AF-dimension of a finite ring");
  afdim_cmd->add_option("ring", ring_path, "Ring file in the text format, or - for stdin");
  afdim_cmd->add_option("--cap-afdim", cap_afdim, "Search cap");

  auto* axb = app.add_subcommand("axb", "Classification of A + X*B[X] for products of finite fields");
  axb->add_option("--a-fields", a_fields_arg, "A-components, e.g. 2,3^2")->required();
  axb->add_option("--b-fields", b_fields_arg, "B-components, e.g. 4 is written 2^2")->required();
  axb->add_option("--map", map_arg, "A-component index for each B-component")->required();

  auto* verify = app.add_subcommand("verify", "Brute-force check of the local AF-dim prediction");
  verify->add_option("-n", n, "Squarefree n, not 0 or 1")->required();
  verify->add_option("-r", r, "Conductor multiplier r >= 2")->required();
  verify->add_option("-p", p, "Prime factor of r")->required();
  verify->add_option("--exponent-margin", margin, "Quotient exponent is 2a + margin");
  verify->add_option("--quotient-bound", quotient_bound, "Max quotient cardinality");
  verify->add_option("--cap-omega", cap_omega, "Omega search cap");

  auto* sweep = app.add_subcommand("sweep", "One classify report per line over ranges of (n, r)");
  sweep->add_option("--n-range", n_range_arg, "Inclusive range lo:hi; skips 0, 1, non-squarefree")
      ->required();
  sweep->add_option("--r-range", r_range_arg, "Inclusive range lo:hi");

  // let --format after a subcommand reach the parent option
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  if (classify->parsed()) {
    emit(json(afdim::classify_order(n, r)), format);
  } else if (split->parsed()) {
    emit(json(afdim::split_prime(n, p)), format);
  } else if (omega_cmd->parsed()) {
    afdim::FiniteRing ring = load_ring(ring_path);
    std::vector<afdim::FiniteRing::Elem> gens;
    for (const std::string& g : gen_args) {
      afdim::FiniteRing::Coords c;
      std::istringstream in(g);
      std::string part;
      while (std::getline(in, part, ',')) c.push_back(std::stoll(part));
      gens.push_back(ring.encode(c));
    }
    afdim::FiniteIdeal ideal = afdim::ideal_from_generators(ring, gens);
    afdim::CappedValue w = afdim::omega(ring, ideal, cap_omega);
    json out{{"cardinality", ring.cardinality()},
             {"ideal_size", ideal.size()},
             {"omega", w.value},
             {"capped", w.capped}};
    emit(out, format);
  } else if (afdim_cmd->parsed()) {
    afdim::FiniteRing ring = load_ring(ring_path);
    afdim::CappedValue v = afdim::af_dim(ring, cap_afdim);
    emit(json{{"cardinality", ring.cardinality()}, {"af_dim", v.value}, {"capped", v.capped}},
         format);
  } else if (axb->parsed()) {
    std::vector<int> spec_map;
    std::istringstream in(map_arg);
    std::string part;
    while (std::getline(in, part, ',')) spec_map.push_back(std::stoi(part));
    emit(json(afdim::classify_axb(parse_fields(a_fields_arg), parse_fields(b_fields_arg),
                                  spec_map)),
         format);
  } else if (verify->parsed()) {
    afdim::VerifyOptions opts{margin, quotient_bound, cap_omega};
    afdim::VerificationReport rep = afdim::verify_afdim_local(n, r, p, opts);
    emit(json(rep), format);
    if (!rep.agrees) return 4;
  } else if (sweep->parsed()) {
    auto [n_lo, n_hi] = parse_range(n_range_arg);
    auto [r_lo, r_hi] = parse_range(r_range_arg);
    for (std::int64_t ni = n_lo; ni <= n_hi; ++ni) {
      if (ni == 0 || ni == 1 || !afdim::is_squarefree(ni)) continue;
      for (std::int64_t ri = std::max<std::int64_t>(1, r_lo); ri <= r_hi; ++ri) {
        std::cout << json(afdim::classify_order(ni, ri)).dump() << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const afdim::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const afdim::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
