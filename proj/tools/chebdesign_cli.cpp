#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "chebdesign/json_io.hpp"

namespace {

using namespace chebdesign;

struct RunConfig {
  std::string model_path;
  std::string design_path;
  std::string design2_path;
  std::string direction = "auto";
  std::string out_path;
  std::string csv_path;
  int grid = 2001;
  unsigned seed = 20110107;
  double tol_mom = 1e-8;
  double tol_psd = 1e-8;
};

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

ChebReport run_both_checks(const ModelSpec& model, const RunConfig& cfg) {
  SamplerConfig sampler;
  sampler.seed = cfg.seed;
  ChebReport det = check_chebyshev_determinant(model.psi, model.domain, sampler);
  ChebReport wron = check_chebyshev_wronskian(model.psi, model.domain);
  return merge_reports(det, wron);
}

ImproveOptions improve_options(const RunConfig& cfg) {
  ImproveOptions opts;
  opts.grid_n = cfg.grid;
  opts.tol_mom = cfg.tol_mom;
  opts.tol_psd = cfg.tol_psd;
  return opts;
}

std::optional<Direction> parse_direction(const std::string& s) {
  if (s == "auto") return std::nullopt;
  if (s == "upper") return Direction::Upper;
  if (s == "lower") return Direction::Lower;
  throw std::runtime_error("--direction must be upper, lower, or auto");
}

int cmd_check_cheb(const RunConfig& cfg) {
  ModelSpec model = model_from_json(load_json_file(cfg.model_path));
  ChebReport rep = run_both_checks(model, cfg);
  emit(cheb_report_to_json(rep), cfg.out_path);
  if (rep.verdict == ChebVerdict::ChebPlus || rep.verdict == ChebVerdict::ChebMinus)
    return 0;
  return rep.verdict == ChebVerdict::Indeterminate ? 2 : 1;
}

int cmd_improve(const RunConfig& cfg) {
  ModelSpec model = model_from_json(load_json_file(cfg.model_path));
  Design design = design_from_json(load_json_file(cfg.design_path), model.domain);
  ChebReport cheb = run_both_checks(model, cfg);
  ImprovementResult res = improve_design(design, model, parse_direction(cfg.direction),
                                         cheb, improve_options(cfg));

  json j = improvement_to_json(res, design);
  j["cheb_verdict"] = to_string(cheb.verdict);
  Eigen::MatrixXd m_old = info_matrix(design, model).entries;
  Eigen::MatrixXd m_new = info_matrix(res.improved, model).entries;
  j["criteria"] = {
      {"D_before", criterion_value(m_old, Criterion::D)},
      {"D_after", criterion_value(m_new, Criterion::D)},
      {"A_before", criterion_value(m_old, Criterion::A)},
      {"A_after", criterion_value(m_new, Criterion::A)},
  };
  emit(j, cfg.out_path);

  if (!cfg.csv_path.empty()) {
    std::ofstream csv(cfg.csv_path);
    if (!csv) throw std::runtime_error("cannot write " + cfg.csv_path);
    csv << "stage,support,weight\n";
    csv.precision(17);
    for (std::size_t i = 0; i < design.size(); ++i)
      csv << "before," << design.support()[i] << "," << design.weights()[i] << "\n";
    for (std::size_t i = 0; i < res.improved.size(); ++i)
      csv << "after," << res.improved.support()[i] << ","
          << res.improved.weights()[i] << "\n";
  }

  bool dominated = res.loewner_certificate >=
                   -cfg.tol_psd * std::max(1.0, m_old.norm());
  return dominated ? 0 : 1;
}

int cmd_admissible(const RunConfig& cfg) {
  ModelSpec model = model_from_json(load_json_file(cfg.model_path));
  Design design = design_from_json(load_json_file(cfg.design_path), model.domain);
  ChebReport cheb = run_both_checks(model, cfg);
  if (cheb.verdict != ChebVerdict::ChebPlus &&
      cheb.verdict != ChebVerdict::ChebMinus) {
    json j{{"error", "Chebyshev verdict is not definite"},
           {"cheb_verdict", to_string(cheb.verdict)}};
    emit(j, cfg.out_path);
    return cheb.verdict == ChebVerdict::Indeterminate ? 2 : 1;
  }
  AdmissibilityReport rep =
      is_admissible_candidate(design, model, cheb, improve_options(cfg));
  json j = admissibility_to_json(rep);
  j["cheb_verdict"] = to_string(cheb.verdict);
  j["index_times_2"] = design.twice_index();
  j["k"] = model.psi.k;
  emit(j, cfg.out_path);
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  ModelSpec model = model_from_json(load_json_file(cfg.model_path));
  Design d1 = design_from_json(load_json_file(cfg.design_path), model.domain);
  Design d2 = design_from_json(load_json_file(cfg.design2_path), model.domain);
  Eigen::MatrixXd m1 = info_matrix(d1, model).entries;
  Eigen::MatrixXd m2 = info_matrix(d2, model).entries;
  LoewnerOrder order = loewner_compare(m1, m2, cfg.tol_psd);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m2 - m1, Eigen::EigenvaluesOnly);
  std::vector<double> eig(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  json j{{"order", to_string(order)},
         {"difference_eigenvalues", eig},
         {"m1", matrix_to_json(m1)},
         {"m2", matrix_to_json(m2)},
         {"theta", std::vector<double>(model.theta.data(),
                                       model.theta.data() + model.theta.size())},
         {"criteria",
          {{"D_1", criterion_value(m1, Criterion::D)},
           {"D_2", criterion_value(m2, Criterion::D)},
           {"A_1", criterion_value(m1, Criterion::A)},
           {"A_2", criterion_value(m2, Criterion::A)}}}};
  emit(j, cfg.out_path);
  return order == LoewnerOrder::Indefinite ? 1 : 0;
}

int cmd_catalog(const RunConfig& cfg) {
  json j = json::array();
  j.push_back({{"type", "polynomial"},
               {"params", {{"degree", "polynomial degree (p-1), p >= 2"}}},
               {"notes", "Psi_j = x^j, k = 2p-2"}});
  j.push_back(
      {{"type", "weighted"},
       {"params",
        {{"p", "parameter count"},
         {"efficiency", "exp_x2 | jacobi (alpha, beta) | inverse_power (n)"}}},
       {"notes", "Psi_j = lambda(x) x^{j-1}, k = 2p-1"}});
  j.push_back({{"type", "rational"},
               {"params",
                {{"numerator", "theta_1..theta_l"},
                 {"denominator", "theta_{l+1}..theta_{l+s}, Q = 1 + sum t x^i"}}},
               {"notes", "Psi_j = x^{j-1}/Q^4, k = 2p-1, p = l+s"}});
  j.push_back({{"type", "sin"},
               {"params", {{"omega", "frequency"}}},
               {"notes", "demonstration basis {1, x, sin(omega x)}"}});
  emit(j, cfg.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chebyshev-system verification and design improvement"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool needs_model, bool needs_design) {
    auto* m = sub->add_option("--model", cfg.model_path, "model JSON path");
    if (needs_model) m->required()->check(CLI::ExistingFile);
    auto* d = sub->add_option("--design", cfg.design_path, "design JSON path");
    if (needs_design) d->required()->check(CLI::ExistingFile);
    sub->add_option("--grid", cfg.grid, "LP grid size");
    sub->add_option("--seed", cfg.seed, "sampler seed");
    sub->add_option("--out", cfg.out_path, "output JSON path (default stdout)");
    sub->add_option("--tol-mom", cfg.tol_mom, "moment tolerance");
    sub->add_option("--tol-psd", cfg.tol_psd, "eigenvalue tolerance");
  };

  auto* check = app.add_subcommand("check-cheb", "verify the Chebyshev property");
  add_common(check, true, false);

  auto* improve = app.add_subcommand("improve", "compute a dominating design");
  add_common(improve, true, true);
  improve->add_option("--direction", cfg.direction, "upper | lower | auto");
  improve->add_option("--csv", cfg.csv_path, "support/weight CSV path");

  auto* adm = app.add_subcommand("admissible", "classify admissibility");
  add_common(adm, true, true);

  auto* cmp = app.add_subcommand("compare", "Loewner-compare two designs");
  add_common(cmp, true, true);
  cmp->add_option("--design2", cfg.design2_path, "second design JSON path")
      ->required()
      ->check(CLI::ExistingFile);

  auto* cat = app.add_subcommand("catalog", "list available model types");
  cat->add_option("--out", cfg.out_path, "output JSON path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check_cheb(cfg);
    if (improve->parsed()) return cmd_improve(cfg);
    if (adm->parsed()) return cmd_admissible(cfg);
    if (cmp->parsed()) return cmd_compare(cfg);
    if (cat->parsed()) return cmd_catalog(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
