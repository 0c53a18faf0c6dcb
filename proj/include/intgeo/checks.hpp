#pragma once

#include <string>
#include <vector>

#include "intgeo/mc_verify.hpp"

namespace intgeo {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Exact invariant checks, parameterized by the largest dimension covered.
CheckResult check_nijenhuis_unity(int max_n);
CheckResult check_unit_t_kinematic(int max_n);
CheckResult check_planar_mu_formula();
CheckResult check_so_routes(int max_n);
CheckResult check_mu_products(int max_n);
CheckResult check_un_hilbert(int max_n);
CheckResult check_cpn_reduction(int max_n);
CheckResult check_un_presentations(int max_n);
CheckResult check_pfaff_saalschutz(int max_n);
CheckResult check_tasaki_matrices(int max_n);
CheckResult check_fourier_iota(int max_n);
CheckResult check_u4_first_order();
CheckResult check_real_space_forms(int max_n, int max_l);
CheckResult check_bfs(int max_n);
CheckResult check_chapoton(int max_m);
CheckResult check_fbar(int max_n);
// Every run of the default Monte Carlo suite within max_abs_z standard errors.
CheckResult check_mc_suite(const mc::RunOptions& opt, double max_abs_z, std::vector<mc::MCEstimate>* runs = nullptr);

std::vector<std::string> check_suite_names();
// Runs one named suite ("so", "un", "spaceform", "mc") up to max_dim.
std::vector<CheckResult> run_suite(const std::string& suite, int max_dim, const mc::RunOptions& mc_opt);

}  // namespace intgeo
