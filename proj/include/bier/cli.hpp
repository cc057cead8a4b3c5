#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bier/io.hpp"

namespace bier::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitBudget = 3;

/// Parses argv, runs one command, writes a JSON report (or error object) to out.
inline int run(int argc, const char* const* argv, std::ostream& out) {
  using io::Json;
  CLI::App app{"Bier spheres, Bier fans and their polytopality", "bier"};
  app.require_subcommand(1);

  std::string input;
  std::string weights;
  std::string witness;
  std::string point;
  std::string face;
  std::string a1;
  std::string a2;
  std::string set_i;
  std::string set_j;
  int n = 0;
  int r = 0;
  int max_n = -1;
  std::size_t max_pivots = 100000;
  std::uint64_t seed = 1;
  int samples = 50;
  std::function<Json()> action;

  auto with_input = [&](CLI::App* cmd) { cmd->add_option("--input", input, "complex JSON file")->required(); };
  auto with_max_n = [&](CLI::App* cmd) { cmd->add_option("--max-n", max_n, "enumeration budget override"); };
  auto budget = [&](int fallback) { return max_n > 0 ? max_n : fallback; };
  auto complex = [&] { return io::complex_from_json(io::read_json_file(input)); };
  auto face_of = [&]() {
    const auto tau = BierFace::make(n, io::parse_face(a1, n), io::parse_face(a2, n));
    if (!input.empty()) {
      const auto k = complex();
      require(k.n() == n && (is_face(k, tau) || tau.is_empty_face()), ErrorCode::InvalidFace,
              tau.to_string() + " is not a face of Bier(K)");
    }
    return tau;
  };
  auto heights_for = [&](const SimplicialComplex& k) -> std::optional<HeightVector> {
    if (!witness.empty()) return io::witness_from_json(io::read_json_file(witness), k.n());
    if (!weights.empty()) return threshold_witness(io::weights_from_json(io::read_json_file(weights)));
    return std::nullopt;
  };

  auto* dual = app.add_subcommand("dual", "Alexander dual of a complex");
  with_input(dual);
  dual->callback([&] { action = [&] { return io::to_json(alexander_dual(complex())); }; });

  auto* bier_cmd = app.add_subcommand("bier", "faces of the Bier sphere");
  bier_cmd->require_subcommand(1);
  auto* bier_facets = bier_cmd->add_subcommand("facets", "facets and f-vector");
  with_input(bier_facets);
  with_max_n(bier_facets);
  bier_facets->callback([&] { action = [&] { return io::facets_report(complex(), budget(12)); }; });
  // Reachable both as `bier fvector` and as the top-level shorthand `fvector`.
  for (auto* parent : {bier_cmd, &app}) {
    auto* cmd = parent->add_subcommand("fvector", "f-vector of the Bier sphere");
    with_input(cmd);
    with_max_n(cmd);
    cmd->callback([&] { action = [&] { return Json{{"f_vector", f_vector(complex(), budget(12))}}; }; });
  }
  auto* bier_ridges = bier_cmd->add_subcommand("ridges", "ridges with their Lambda/V/Cross class");
  with_input(bier_ridges);
  bier_ridges->callback([&] { action = [&] { return io::ridges_report(complex()); }; });

  auto* fan = app.add_subcommand("fan", "the canonical fan Fan(K)");
  fan->require_subcommand(1);
  auto* fan_verify = fan->add_subcommand("verify", "check completeness, simpliciality and the intersection law");
  with_input(fan_verify);
  with_max_n(fan_verify);
  fan_verify->add_option("--seed", seed, "seed for sampled face pairs");
  fan_verify->add_option("--samples", samples, "number of sampled face pairs");
  fan_verify->callback([&] { action = [&] { return io::to_json(verify_fan(complex(), seed, samples, budget(8))); }; });
  for (auto [name, help] : {std::pair{"cone", "braid cone of a face"}, std::pair{"rays", "primitive rays of a facet"}}) {
    auto* cmd = fan->add_subcommand(name, help);
    cmd->add_option("--n", n, "ground set size")->required();
    cmd->add_option("--a1", a1, "A1 as 1-based list, e.g. 1,2");
    cmd->add_option("--a2", a2, "A2 as 1-based list");
    cmd->add_option("--input", input, "optional complex JSON; the face is checked against Bier(K)");
    if (std::string(name) == "cone")
      cmd->callback([&] { action = [&] { return io::to_json(cone_of_face(face_of())); }; });
    else
      cmd->callback([&] { action = [&] { return io::rays_report(face_of()); }; });
  }

  auto* volume = app.add_subcommand("volume", "normalized and Euclidean volume of Star(K)");
  with_input(volume);
  volume->callback([&] { action = [&] { return io::volume_report(complex()); }; });

  auto* delta = app.add_subcommand("delta-volume", "volume change from adding a minimal non-face");
  with_input(delta);
  delta->add_option("--face", face, "minimal non-face B as a 1-based list")->required();
  delta->callback([&] {
    action = [&] {
      const auto k = complex();
      const auto b = io::parse_face(face, k.n());
      return Json{{"face", io::to_json(b)}, {"delta", volume_delta(k, b)}};
    };
  });

  auto* star = app.add_subcommand("star-contains", "membership of a point in Star(K)");
  with_input(star);
  star->add_option("--point", point, "point of H_0, e.g. 1/3,0,-1/3")->required();
  star->callback([&] {
    action = [&] {
      const auto k = complex();
      const auto x = io::parse_point(point);
      const auto gauge = star_gauge(k, x);
      return Json{{"contains", gauge <= 1}, {"gauge", to_string(gauge)}};
    };
  });

  auto* vkf = app.add_subcommand("vkf", "the Van Kampen-Flores polytope");
  vkf->require_subcommand(1);
  auto* vkf_face = vkf->add_subcommand("face", "face criterion for a vertex selection");
  vkf_face->add_option("--n", n)->required();
  vkf_face->add_option("--I", set_i, "indices of +u_i");
  vkf_face->add_option("--J", set_j, "indices of -u_j");
  vkf_face->callback([&] {
    action = [&] {
      check_ground(n);
      return Json{{"face", vkf_is_face(n, io::parse_face(set_i, n), io::parse_face(set_j, n))}};
    };
  });
  auto* vkf_mink = vkf->add_subcommand("minkowski", "Minkowski functionals at a point (delta circuit)");
  vkf_mink->add_option("--n", n)->required();
  vkf_mink->add_option("--point", point)->required();
  vkf_mink->callback([&] { action = [&] { return io::to_json(minkowski(Circuit::delta(n), io::parse_point(point))); }; });
  auto* vkf_iso = vkf->add_subcommand("polar-iso", "polar dual versus the median hypersimplex");
  vkf_iso->add_option("--n", n)->required();
  with_max_n(vkf_iso);
  vkf_iso->callback([&] { action = [&] { return io::to_json(polar_iso_check(n, budget(8))); }; });

  auto* hyper = app.add_subcommand("hypersimplex", "vertices of the hypersimplex");
  hyper->add_option("--n", n)->required();
  hyper->add_option("--r", r)->required();
  hyper->callback([&] {
    action = [&] {
      const auto vs = hypersimplex_vertices(n, r);
      return Json{{"vertices", vs}, {"count", vs.size()}};
    };
  });

  auto* threshold = app.add_subcommand("threshold", "threshold complex and its height witness");
  threshold->add_option("--weights", weights, "weights JSON file")->required();
  threshold->callback([&] {
    action = [&] {
      const auto w = io::weights_from_json(io::read_json_file(weights));
      return Json{{"complex", io::to_json(threshold_complex(w))}, {"witness", io::to_json(threshold_witness(w))}};
    };
  });

  auto* poly = app.add_subcommand("polytopality", "K-submodular height functions");
  poly->require_subcommand(1);
  auto* solve_cmd = poly->add_subcommand("solve", "decide feasibility of the wall-crossing system");
  with_input(solve_cmd);
  solve_cmd->add_option("--max-pivots", max_pivots, "simplex pivot budget");
  solve_cmd->callback([&] {
    action = [&] {
      SolveOptions options;
      options.max_pivots = max_pivots;
      return io::to_json(solve(complex(), options));
    };
  });
  auto* verify_cmd = poly->add_subcommand("verify", "check a height vector against every wall inequality");
  with_input(verify_cmd);
  verify_cmd->add_option("--witness", witness, "witness JSON file");
  verify_cmd->add_option("--weights", weights, "use the threshold witness of these weights");
  verify_cmd->callback([&] {
    action = [&] {
      const auto k = complex();
      const auto f = heights_for(k);
      require(f.has_value(), ErrorCode::Parse, "verify needs --witness or --weights");
      return Json{{"valid", verify_witness(k, *f)}};
    };
  });
  auto* realize_cmd = poly->add_subcommand("realize", "vertices of the polytope P_f");
  with_input(realize_cmd);
  with_max_n(realize_cmd);
  realize_cmd->add_option("--witness", witness, "witness JSON file (default: solve)");
  realize_cmd->add_option("--weights", weights, "use the threshold witness of these weights");
  realize_cmd->add_option("--max-pivots", max_pivots, "simplex pivot budget when solving");
  realize_cmd->callback([&] {
    action = [&] {
      const auto k = complex();
      auto f = heights_for(k);
      if (!f) {
        SolveOptions options;
        options.max_pivots = max_pivots;
        const auto result = solve(k, options);
        require(result.feasible, ErrorCode::WitnessInvalid, "Fan(K) admits no K-submodular function");
        f = result.witness;
      }
      return io::to_json(realize_polytope(k, *f, budget(6)));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << io::error_json(ErrorCode::Parse, e.what()).dump(2) << "\n";
    return kExitDomain;
  }

  try {
    out << action().dump(2) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    out << io::error_json(e.code(), e.what()).dump(2) << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitDomain;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out) {
  std::vector<const char*> argv{"bier"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out);
}

}  // namespace bier::cli
