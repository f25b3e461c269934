#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pdef/coxeter.hpp"
#include "pdef/descent.hpp"
#include "pdef/fox.hpp"
#include "pdef/gs.hpp"
#include "pdef/presentation.hpp"
#include "pdef/rewriting.hpp"

namespace pdef::report {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull);
std::string hex64(std::uint64_t v);

Json rational(const Rational& q);
Json rational(const ExtendedRational& q);

Json presentation(const Presentation& p);
Json analysis(const Presentation& p, const PresentationAnalysis& a);
Json gs_function(const GSFunction& f);
Json verdict(const NegativityVerdict& v);
Json kernel(const KernelPresentation& k);
Json descent(const DescentCertificate& c);
Json exceptional_block(const ExceptionalBlock& b);
Json surjection(const SurjectionSpec& s);
Json schedule(const TorsionSchedule& s);
Json alexander(const Presentation& p, const AlexanderMatrix& m,
               const AlexanderPolynomial& a);

// key: value lines, nested keys joined with '.'.
std::string plain(const Json& j);

}  // namespace pdef::report
