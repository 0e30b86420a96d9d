#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ftlab/lab/config.hpp"
#include "ftlab/lab/records.hpp"

namespace ftlab::lab {

// Each runner returns sorted records stamped with the config hash and
// timestamp. A failing parameter point becomes a Verdict::error record and the
// sweep continues.

/// Per (n, s): log L_n by both routes against the finite-temperature Airy
/// determinant; per s: fitted log-log slope of the error.
std::vector<ResultRecord> run_theorem1(const LabConfig& cfg);
/// Per (n, s): sup over the 5x5 grid on [-2, 2]^2 of |rescaled kernel - K_inf|.
std::vector<ResultRecord> run_theorem2(const LabConfig& cfg);
/// Per (n, Q, s): rho_n and c_n; Q-universality gaps and S-differences.
std::vector<ResultRecord> run_theorem3(const LabConfig& cfg);
/// Trace identity, route agreement, n = 1 oracle, q0 limit, polylog
/// identities, Fredholm self-convergence and the local Tracy-Widom check.
std::vector<ResultRecord> run_crosschecks(const LabConfig& cfg);
/// det(I - K_T) on s_list x T_list plus the classical Airy column.
std::vector<ResultRecord> run_fredholm(const LabConfig& cfg);
/// Solution snapshot (I, P, Phi(0|S)) and internal checks per T in T_list.
std::vector<ResultRecord> run_idpii(const LabConfig& cfg);
/// Support, constants and density samples of the equilibrium measure.
std::vector<ResultRecord> run_eqmeasure(const LabConfig& cfg);

/// Dispatch by subcommand name; ConfigError for an unknown name.
std::vector<ResultRecord> run_study(std::string_view name, const LabConfig& cfg);
const std::vector<std::string>& study_names();

/// 0 when every record passes or is informational, 4 when any record is an
/// error, 1 when any check failed.
int exit_code_for(const std::vector<ResultRecord>& records);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ftlab::lab
