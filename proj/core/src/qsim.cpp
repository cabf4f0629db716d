#include "qauth/qsim.hpp"

#include <cmath>
#include <iterator>

#include "qauth/error.hpp"

namespace qauth {

std::string_view to_string(Basis b) noexcept { return b == Basis::Z ? "Z" : "X"; }

QubitHandle prepare(bool bit, Basis basis) noexcept { return QubitHandle(basis, bit); }

bool measure(QubitHandle& handle, Basis basis, RandomStream& rng) {
  if (handle.consumed_) throw ProtocolViolation("qubit already measured (no-cloning)");
  handle.consumed_ = true;
  if (basis == handle.basis_) return handle.bit_;
  return rng.coin();
}

std::vector<bool> measure_all(QubitSequence& qubits, const std::vector<Basis>& bases, RandomStream& rng) {
  if (bases.size() != qubits.size()) throw InvalidInput("measure_all: basis count does not match qubit count");
  std::vector<bool> out;
  out.reserve(qubits.size());
  for (std::size_t j = 0; j < qubits.size(); ++j) out.push_back(measure(qubits[j], bases[j], rng));
  return out;
}

StateVector statevector_of(bool bit, Basis basis) {
  const double h = 1.0 / std::sqrt(2.0);
  if (basis == Basis::Z) return bit ? StateVector{{0.0, 1.0}} : StateVector{{1.0, 0.0}};
  return bit ? StateVector{{h, -h}} : StateVector{{h, h}};
}

std::pair<double, double> born_probabilities(const StateVector& s, Basis basis) {
  const double norm = std::norm(s.amplitudes[0]) + std::norm(s.amplitudes[1]);
  if (std::abs(norm - 1.0) > kNormTolerance) throw InvalidInput("state vector is not normalized");
  if (basis == Basis::Z) return {std::norm(s.amplitudes[0]), std::norm(s.amplitudes[1])};
  const auto plus = statevector_of(false, Basis::X);
  const auto minus = statevector_of(true, Basis::X);
  auto overlap = [&](const StateVector& b) {
    return std::conj(b.amplitudes[0]) * s.amplitudes[0] + std::conj(b.amplitudes[1]) * s.amplitudes[1];
  };
  return {std::norm(overlap(plus)), std::norm(overlap(minus))};
}

void ChannelTap::inject(QubitSequence qubits) {
  in_flight_.insert(in_flight_.end(), std::make_move_iterator(qubits.begin()), std::make_move_iterator(qubits.end()));
}

ChannelTap channel_send(QubitSequence qubits) { return ChannelTap(std::move(qubits)); }

}  // namespace qauth
