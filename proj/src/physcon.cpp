#include "ugatom/physcon.hpp"

namespace ugatom {

double joule_to_ev(double joules, const PhysicalConstants& k) { return joules / k.e; }

double ev_to_joule(double ev, const PhysicalConstants& k) { return ev * k.e; }

}  // namespace ugatom
