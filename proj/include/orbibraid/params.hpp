#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbibraid {

// Parameters of the orbifold surface: a disk with n marked points (the
// strands), L punctures and N cone points of orders m_1..m_N (each >= 2).
struct GroupParams {
  int n = 1;
  int L = 0;
  int N = 0;
  std::vector<int> m;

  void validate() const {
    if (n < 1) throw std::invalid_argument("params: n must be >= 1");
    if (L < 0) throw std::invalid_argument("params: L must be >= 0");
    if (N < 0) throw std::invalid_argument("params: N must be >= 0");
    if (static_cast<int>(m.size()) != N)
      throw std::invalid_argument("params: m must have exactly N entries");
    for (int v : m)
      if (v < 2) throw std::invalid_argument("params: cone orders must be >= 2");
  }

  // 1-based cone order accessor: order(nu) = m_nu.
  int order(int nu) const {
    if (nu < 1 || nu > N) throw std::out_of_range("params: cone index out of range");
    return m[static_cast<size_t>(nu) - 1];
  }

  int max_order() const {
    int r = 0;
    for (int v : m) r = std::max(r, v);
    return r;
  }

  bool operator==(const GroupParams& o) const {
    return n == o.n && L == o.L && N == o.N && m == o.m;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "(n=" << n << ",L=" << L << ",N=" << N << ",m=(";
    for (int i = 0; i < N; ++i) os << (i ? "," : "") << m[static_cast<size_t>(i)];
    os << "))";
    return os.str();
  }
};

}  // namespace orbibraid
