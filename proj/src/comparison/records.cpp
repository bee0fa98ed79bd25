#include "lorentz/comparison/records.hpp"

namespace lorentz::comparison {

const char* to_string(BoundSide s) { return s == BoundSide::below ? "below" : "above"; }
const char* to_string(Mode m) { return m == Mode::timelike ? "timelike" : "causal"; }
const char* to_string(Status s) {
    switch (s) {
        case Status::consistent: return "consistent";
        case Status::violated: return "violated";
        default: return "inconclusive";
    }
}

Json branch_json(const BranchReport& b) {
    Json g1 = Json::array(), g2 = Json::array();
    for (auto p : b.gamma1) g1.push_back(point_json(p));
    for (auto p : b.gamma2) g2.push_back(point_json(p));
    Json j{{"branching", b.branching}, {"reason", b.reason}, {"branch_point", point_json(b.branch_point)},
           {"shared_d_length", b.shared_d_length}, {"shared_tau", b.shared_tau},
           {"shared", to_string(b.shared)}, {"rest1", to_string(b.rest1)}, {"rest2", to_string(b.rest2)},
           {"timelike", b.timelike}, {"gamma1", g1}, {"gamma2", g2}};
    return j;
}

}  // namespace lorentz::comparison
