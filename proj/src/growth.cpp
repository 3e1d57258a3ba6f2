#include "linorbit/growth.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "linorbit/errors.hpp"
#include "linorbit/rng.hpp"

namespace linorbit {
namespace {

SizeReport output_size(const Problem& target) {
  if (const auto* ip = std::get_if<ZeroOneIp>(&target)) {
    return measure(ZeroOneIp{to_equality_form(ip->program)});
  }
  return measure(target);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

GrowthReport audit(std::string_view reduction_id, const GeneratorSpec& family,
                   std::span<const std::size_t> scales, std::size_t samples) {
  const ReductionSpec& spec = find_reduction(reduction_id);
  if (family.kind != spec.source) {
    throw ContractViolation("family generates " + std::string(tag(family.kind)) + " but " +
                            spec.id + " expects " + std::string(tag(spec.source)));
  }
  GrowthReport report;
  report.reduction = spec.id;
  report.claim = spec.growth;
  report.linear_claim = spec.linear;

  const CounterRng seeds(family.seed);
  std::map<std::string, FormulaTally> tallies;
  std::vector<std::string> tally_order;
  for (std::size_t scale : scales) {
    for (std::size_t sample = 0; sample < samples; ++sample) {
      GeneratorSpec g = family;
      g.size = scale;
      g.seed = seeds.draw({scale, sample});
      const Problem source = generate(g);
      const Problem target = spec.transform(source);
      const SizeReport in = measure(source);
      const SizeReport out = output_size(target);
      report.pairs.push_back({scale, g.seed, in.elements, out.elements, in.bits, out.bits});
      if (spec.counts) {
        for (const CountCheck& c : spec.counts(source, target)) {
          auto [it, fresh] = tallies.try_emplace(c.name, FormulaTally{c.name, 0, 0});
          if (fresh) tally_order.push_back(c.name);
          ++it->second.total;
          if (c.ok()) {
            ++it->second.passed;
          } else {
            report.violations.push_back("scale " + std::to_string(scale) + " seed " +
                                        std::to_string(g.seed) + ": " + c.name + " expected " +
                                        std::to_string(c.expected) + ", got " +
                                        std::to_string(c.actual));
          }
        }
      }
    }
  }
  std::sort(report.pairs.begin(), report.pairs.end(), [](const SizePair& a, const SizePair& b) {
    return std::tie(a.in_elements, a.scale, a.seed) < std::tie(b.in_elements, b.scale, b.seed);
  });

  long double xy = 0;
  long double xx = 0;
  for (const SizePair& p : report.pairs) {
    if (p.in_elements > 0) {
      report.max_ratio = std::max(report.max_ratio, static_cast<double>(p.out_elements) /
                                                        static_cast<double>(p.in_elements));
    }
    if (p.in_bits > 0) {
      report.max_bits_ratio = std::max(
          report.max_bits_ratio, static_cast<double>(p.out_bits) / static_cast<double>(p.in_bits));
    }
    xy += static_cast<long double>(p.in_elements) * p.out_elements;
    xx += static_cast<long double>(p.in_elements) * p.in_elements;
    if (!report.claim.holds(p.in_elements, p.out_elements)) {
      report.bound_holds = false;
      report.violations.push_back("scale " + std::to_string(p.scale) + " seed " +
                                  std::to_string(p.seed) + ": size " +
                                  std::to_string(p.out_elements) + " exceeds " +
                                  std::to_string(report.claim.alpha) + " * " +
                                  std::to_string(p.in_elements) + " + " +
                                  std::to_string(report.claim.beta));
    }
  }
  report.fitted_slope = xx > 0 ? static_cast<double>(xy / xx) : 0.0;
  for (const auto& name : tally_order) {
    const FormulaTally& t = tallies.at(name);
    report.formulas.push_back(t);
    if (t.passed != t.total) report.formulas_hold = false;
  }
  return report;
}

GeneratorSpec default_family(std::string_view reduction_id, std::uint64_t seed) {
  const ReductionSpec& spec = find_reduction(reduction_id);
  GeneratorSpec g;
  g.kind = spec.source;
  g.seed = seed;
  g.density = 0.3;
  switch (spec.source) {
    case ProblemKind::kSat:
      g.max_clause = 8;
      break;
    case ProblemKind::kChromaticNumber:
      // Trees: the sparsest connected graphs.
      if (!spec.linear) g.density = 0.0;
      break;
    default:
      break;
  }
  return g;
}

std::string to_table(const GrowthReport& r) {
  std::ostringstream out;
  out << "reduction " << r.reduction << "  claim out <= " << r.claim.alpha << " * in + "
      << r.claim.beta << (r.linear_claim ? "" : "  (not linear)") << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%8s %20s %10s %10s %8s %10s %10s %8s\n", "scale", "seed",
                "in", "out", "ratio", "in_bits", "out_bits", "ratio");
  out << line;
  for (const SizePair& p : r.pairs) {
    const double ratio = p.in_elements ? static_cast<double>(p.out_elements) / p.in_elements : 0.0;
    const double bits = p.in_bits ? static_cast<double>(p.out_bits) / p.in_bits : 0.0;
    std::snprintf(line, sizeof line, "%8zu %20llu %10llu %10llu %8.3f %10llu %10llu %8.3f\n",
                  p.scale, static_cast<unsigned long long>(p.seed),
                  static_cast<unsigned long long>(p.in_elements),
                  static_cast<unsigned long long>(p.out_elements), ratio,
                  static_cast<unsigned long long>(p.in_bits),
                  static_cast<unsigned long long>(p.out_bits), bits);
    out << line;
  }
  out << "max ratio " << fixed(r.max_ratio, 3) << "  max bits ratio " << fixed(r.max_bits_ratio, 3)
      << "  fitted slope " << fixed(r.fitted_slope, 3) << '\n';
  for (const FormulaTally& f : r.formulas) {
    out << "formula " << f.name << ": " << f.passed << "/" << f.total << '\n';
  }
  for (const auto& v : r.violations) out << "violation " << v << '\n';
  out << "bound " << (r.bound_holds ? "holds" : "fails") << "  formulas "
      << (r.formulas_hold ? "hold" : "fail") << "  => " << (r.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace linorbit
