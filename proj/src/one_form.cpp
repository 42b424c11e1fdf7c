#include "kahler/one_form.hpp"

#include <algorithm>
#include <cmath>

#include "kahler/errors.hpp"
#include "kahler/meromorphic.hpp"

namespace kahler {

OneForm OneForm::from_w(const MeromorphicFunction& w) {
  OneForm form;
  form.k = [w](double x, double y) { return w({x, y}).u; };
  form.g = [w](double x, double y) { return -w({x, y}).v; };
  for (const auto& p : find_poles(w)) form.singularities.push_back(p.location);
  return form;
}

std::string to_string(FormClass c) {
  switch (c) {
    case FormClass::not_closed: return "not_closed";
    case FormClass::closed_only: return "closed_only";
    case FormClass::closed_and_cr: return "closed_and_CR";
  }
  return "?";
}

FormClass classify_one_form(const OneForm& form, std::span<const EvenElement> samples, const ClassifyOptions& opts) {
  bool closed = true;
  bool cauchy_riemann = true;
  const double h = opts.step;
  for (const auto& s : samples) {
    for (const auto& sing : form.singularities) {
      if (abs(s - sing) <= opts.clearance) {
        throw ComputationError("sample " + to_string(s) + " is within " + format_real(opts.clearance) +
                               " of the singularity " + to_string(sing));
      }
    }
    const double kx = (form.k(s.u + h, s.v) - form.k(s.u - h, s.v)) / (2 * h);
    const double ky = (form.k(s.u, s.v + h) - form.k(s.u, s.v - h)) / (2 * h);
    const double gx = (form.g(s.u + h, s.v) - form.g(s.u - h, s.v)) / (2 * h);
    const double gy = (form.g(s.u, s.v + h) - form.g(s.u, s.v - h)) / (2 * h);
    if (!std::isfinite(kx) || !std::isfinite(ky) || !std::isfinite(gx) || !std::isfinite(gy)) {
      throw ComputationError("non-finite derivative at sample " + to_string(s) + " (too close to a singularity?)");
    }
    const double scale = 1.0 + std::max({std::abs(kx), std::abs(ky), std::abs(gx), std::abs(gy)});
    if (std::abs(ky - gx) > opts.tolerance * scale) closed = false;
    if (std::abs(kx + gy) > opts.tolerance * scale) cauchy_riemann = false;
  }
  if (!closed) return FormClass::not_closed;
  return cauchy_riemann ? FormClass::closed_and_cr : FormClass::closed_only;
}

}  // namespace kahler
