#pragma once

// Problem construction for the three adiabatic algorithms: initial and final
// states, interpolated Hamiltonians built from ground-state projectors, and
// the closed-form low spectra used to cross-check the eigensolver.

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace aqc {

// Real amplitudes over the 2^n computational basis, most significant qubit
// first (|x0 x1 ...> with x the binary index).
struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXd amps;

  Eigen::Index dim() const { return amps.size(); }
};

enum class Algorithm { Search, DeutschJozsa, ConstantTimeDJ };

std::string_view algorithm_name(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);  // "search" | "dj" | "ctdj"

struct ProblemSpec {
  Algorithm algorithm = Algorithm::Search;
  int n_qubits = 2;
  StateVector initial;
  int alpha = 0;         // DJ variants only; beta = 1 - alpha
  int marked_index = 0;  // Search only
};

void validate(const ProblemSpec& spec);

// f(s) = 1 - s, g(s) = s weights of the linear interpolation schedule.
struct SchedulePoint {
  double s = 0.0;
  double f = 1.0;
  double g = 0.0;
};
SchedulePoint schedule_point(double s);  // rejects s outside [0, 1]

StateVector make_state(int n_qubits, Eigen::VectorXd amps);        // length check only
StateVector normalized_state(int n_qubits, Eigen::VectorXd amps);  // rescales to unit norm
StateVector uniform_state(int n_qubits);

// The fixed initial-state families used by the runtime tables (n = 2 or 3).
StateVector preset_state(std::string_view color, int n_qubits);
const std::vector<std::string>& preset_colors();

StateVector final_state(const ProblemSpec& spec);

// I - |psi><psi|; the ground state of the result is psi with energy 0.
Eigen::MatrixXd projector_hamiltonian(const StateVector& psi);

// (1-s) * H0 + s * H1 with H0/H1 the projector Hamiltonians of the initial
// and final states.
Eigen::MatrixXd hamiltonian_at(const ProblemSpec& spec, double s);

// H1 - H0; constant in s for the linear schedule.
Eigen::MatrixXd dh_ds(const ProblemSpec& spec);

struct LowSpectrum {
  double e_minus = 0.0;
  double e_plus = 0.0;
};

class unsupported_analytic_form : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Closed-form lowest two eigenvalues; valid only for the uniform initial
// state (rejected otherwise).
LowSpectrum analytic_low_spectrum(const ProblemSpec& spec, double s);

}  // namespace aqc
