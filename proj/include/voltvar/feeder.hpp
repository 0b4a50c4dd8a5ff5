#pragma once

#include <complex>
#include <string>
#include <vector>

namespace voltvar {

struct Line {
  int from = 0;
  int to = 0;
  std::complex<double> z;  // series impedance, p.u.
};

/// Electrical description of a radial (or weakly meshed) distribution feeder.
/// Bus 0 is always the substation; buses 1..N carry loads and DERs.
/// All quantities are per-unit on the base documented in the feeder file.
struct FeederSpec {
  int bus_count = 0;                       // N + 1, including the substation
  std::vector<Line> lines;
  std::vector<std::complex<double>> shunt; // per-bus shunt admittance, size N+1
  std::vector<int> der_buses;              // ordered set C, subset of {1..N}
  std::vector<double> q_min;               // per-DER lower reactive limit
  std::vector<double> q_max;               // per-DER upper reactive limit
  std::vector<double> v_min;               // per-bus lower voltage bound, size N
  std::vector<double> v_max;               // per-bus upper voltage bound, size N

  int n() const { return bus_count - 1; }
  int der_count() const { return static_cast<int>(der_buses.size()); }

  /// Non-DER buses 1..N in ascending order.
  std::vector<int> load_buses() const;

  /// Checks all structural invariants (connectivity, nonzero impedances,
  /// q_min <= 0 <= q_max, v_min < 1 < v_max, index ranges). Throws on failure.
  void validate() const;
};

/// Parses a feeder file with [buses], [lines], [shunts], [ders] and [limits]
/// sections. See data/feeder37.ini for the documented schema.
FeederSpec load_feeder(const std::string& path);

/// Writes a feeder in the same section format that load_feeder reads.
void save_feeder(const FeederSpec& spec, const std::string& path,
                 const std::string& header_comment = {});

}  // namespace voltvar
