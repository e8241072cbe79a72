#include "commvar/combinatorics.hpp"

#include "commvar/errors.hpp"

namespace commvar {

namespace {

Rat ratio(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

int parity_sign(unsigned n) { return n % 2 == 0 ? 1 : -1; }

template <class Step>
Int p_recursion(unsigned k, const Int& x, Step step) {
  if (k == 0) return Int(1);
  Int p = x;
  for (unsigned j = 2; j <= k; ++j) p = step(j, x) * p + parity_sign(j);
  return p;
}

}  // namespace

Rat r_val(unsigned k, unsigned l) {
  if (k < 1 || k > l) throw ContractError("r(k, l) needs 1 <= k <= l");
  Int s = 0;
  for (unsigned j = 0; j < k; ++j) s += parity_sign(j) * binomial(l, j);
  return Rat(s);
}

Rat r_closed(unsigned k, unsigned l) {
  if (k < 1 || k > l) throw ContractError("r(k, l) needs 1 <= k <= l");
  return parity_sign(k - 1) * ratio(factorial(l - 1), factorial(k - 1) * factorial(l - k));
}

Rat c_val(unsigned k, unsigned l) {
  Rat s = 0;
  for (unsigned j = 0; j <= k; ++j) s += parity_sign(j) * ratio(Int(1), factorial(j) * factorial(l + j));
  return s;
}

Int p_val(unsigned k, const Int& x) {
  return p_recursion(k, x, [](unsigned j, const Int& y) { return Int(j * (y + j)); });
}

Int p_val_printed(unsigned k, const Int& x) {
  return p_recursion(k, x, [](unsigned j, const Int& y) { return Int(j * (y - j)); });
}

Rat psi_val(unsigned e, unsigned k, unsigned l) {
  if (!(2 <= e && e <= k && k <= l)) throw ContractError("psi(e, k, l) needs 2 <= e <= k <= l");
  Rat s = r_val(k, l);
  for (unsigned j = 1; j < e; ++j)
    s -= parity_sign(k - j) * c_val(j, k - j) * r_val(j, l) * ratio(factorial(l - j), factorial(l - k));
  return s;
}

Rat phi_val(unsigned e, unsigned k) {
  if (!(2 <= e && e <= k)) throw ContractError("phi(e, k) needs 2 <= e <= k");
  Rat s = k;
  for (unsigned j = 1; j < e; ++j) {
    const Int f = factorial(j);
    s -= ratio(Int(j) * p_val(j, Int(k - j)), f * f);
  }
  return s;
}

Rat csco_lhs(unsigned e, unsigned k, unsigned l) {
  return parity_sign(k - 1) * ratio(factorial(k) * factorial(l - k), factorial(l - 1)) * psi_val(e, k, l);
}

std::vector<ReportDoc> combinatorics_suite(const CombinatoricsBounds& bounds) {
  const unsigned L = bounds.max_l_rc;
  const unsigned M = bounds.max_l_psi;
  if (L == 0 || M < 2) throw ContractError("combinatorics bounds too small");

  ReportDoc r_doc = make_report("comb", "r-closed-form",
                                "r(k,l) = (-1)^{k-1}(l-1)!/((k-1)!(l-k)!) for 1 <= k <= l");
  Json r_bad = Json::array();
  std::size_t r_cases = 0;
  for (unsigned l = 1; l <= L; ++l)
    for (unsigned k = 1; k <= l; ++k, ++r_cases)
      if (r_val(k, l) != r_closed(k, l))
        r_bad.push_back({{"k", k}, {"l", l}, {"sum", to_string(r_val(k, l))}, {"closed", to_string(r_closed(k, l))}});
  r_doc.witness["cases"] = r_cases;
  r_doc.witness["max_l"] = L;
  if (!r_bad.empty()) r_doc.status = Status::Fail, r_doc.witness["failures"] = r_bad;

  ReportDoc c_doc = make_report("comb", "c-equals-p",
                                "c(k,l) k!(l+k)! = p_k(l), with p_k(x) = k(x+k)p_{k-1}(x) + (-1)^k");
  ReportDoc m_doc = make_report("comb", "p-mod-k", "p_k(l) is congruent to +1 or -1 modulo k for k >= 2");
  Json c_bad = Json::array(), m_bad = Json::array();
  std::size_t c_cases = 0, m_cases = 0, printed_disagree = 0;
  Json printed_example = Json::object();
  for (unsigned k = 0; k <= L; ++k)
    for (unsigned l = 1; l <= L; ++l) {
      ++c_cases;
      const Rat lhs = c_val(k, l) * Rat(factorial(k) * factorial(l + k));
      const Int p = p_val(k, Int(l));
      if (lhs != Rat(p)) c_bad.push_back({{"k", k}, {"l", l}, {"sum", to_string(lhs)}, {"p", p.get_str()}});
      if (lhs != Rat(p_val_printed(k, Int(l)))) {
        if (printed_disagree++ == 0)
          printed_example = {{"k", k}, {"l", l}, {"sum", to_string(lhs)}, {"printed", p_val_printed(k, Int(l)).get_str()}};
      }
      if (k >= 2) {
        ++m_cases;
        Int rem = p % k;
        if (rem < 0) rem += k;
        if (rem != 1 && rem != k - 1) m_bad.push_back({{"k", k}, {"l", l}, {"residue", rem.get_str()}});
      }
    }
  c_doc.witness["cases"] = c_cases;
  c_doc.witness["max_k"] = L;
  c_doc.witness["max_l"] = L;
  c_doc.witness["printed_recursion_disagreements"] = printed_disagree;
  if (printed_disagree > 0) c_doc.witness["printed_recursion_example"] = printed_example;
  if (!c_bad.empty()) c_doc.status = Status::Fail, c_doc.witness["failures"] = c_bad;
  m_doc.witness["cases"] = m_cases;
  if (!m_bad.empty()) m_doc.status = Status::Fail, m_doc.witness["failures"] = m_bad;

  ReportDoc id_doc = make_report("comb", "psi-phi-identity",
                                 "(-1)^{k-1} k!(l-k)!/(l-1)! psi(e,k,l) = phi(e,k) for 2 <= e <= k <= l");
  ReportDoc nz_doc = make_report("comb", "psi-nonvanishing", "psi(e,k,l) != 0 for 2 <= e <= k <= l");
  Json id_bad = Json::array(), nz_bad = Json::array();
  std::size_t triples = 0;
  // phi depends on (e, k) only
  std::vector<std::vector<Rat>> phi(M + 1, std::vector<Rat>(M + 1));
  for (unsigned k = 2; k <= M; ++k)
    for (unsigned e = 2; e <= k; ++e) phi[e][k] = phi_val(e, k);
  for (unsigned l = 2; l <= M; ++l)
    for (unsigned k = 2; k <= l; ++k)
      for (unsigned e = 2; e <= k; ++e) {
        ++triples;
        const Rat psi = psi_val(e, k, l);
        const Rat lhs = parity_sign(k - 1) * ratio(factorial(k) * factorial(l - k), factorial(l - 1)) * psi;
        if (lhs != phi[e][k])
          id_bad.push_back({{"e", e}, {"k", k}, {"l", l}, {"lhs", to_string(lhs)}, {"phi", to_string(phi[e][k])}});
        if (sgn(psi) == 0) nz_bad.push_back({{"e", e}, {"k", k}, {"l", l}});
      }
  id_doc.witness["triples"] = triples;
  id_doc.witness["max_l"] = M;
  nz_doc.witness["triples"] = triples;
  nz_doc.witness["max_l"] = M;
  nz_doc.witness["psi_2_2_2"] = to_string(psi_val(2, 2, 2));
  if (!id_bad.empty()) id_doc.status = Status::Fail, id_doc.witness["failures"] = id_bad;
  if (!nz_bad.empty()) nz_doc.status = Status::Fail, nz_doc.witness["failures"] = nz_bad;

  return {r_doc, c_doc, m_doc, id_doc, nz_doc};
}

}  // namespace commvar
