#include "lorentz/core/space.hpp"

namespace lorentz {

const char* to_string(Backend b) {
    switch (b) {
        case Backend::finite: return "finite";
        case Backend::causal_set: return "causal-set";
        case Backend::lattice_spacetime: return "lattice-spacetime";
        case Backend::model_space: return "model-space";
        case Backend::restricted_subset: return "restricted-subset";
        case Backend::smooth_spacetime: return "smooth-spacetime";
    }
    return "?";
}

const char* to_string(Exactness e) {
    return e == Exactness::exact ? "exact" : "lower-approximate";
}

}  // namespace lorentz
