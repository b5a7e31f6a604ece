#pragma once

#include <stdexcept>
#include <string>

namespace multicorn {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MULTICORN_DEFINE_ERROR(Name)                                   \
    struct Name : Error {                                              \
        explicit Name(const std::string& what = #Name) : Error(what) {}\
    }

MULTICORN_DEFINE_ERROR(InsideOrUndecided);
MULTICORN_DEFINE_ERROR(RayBlocked);
MULTICORN_DEFINE_ERROR(SolverDiverged);
MULTICORN_DEFINE_ERROR(ContourContaminated);
MULTICORN_DEFINE_ERROR(FormulaInapplicable);
MULTICORN_DEFINE_ERROR(StepCollapse);
MULTICORN_DEFINE_ERROR(NotSimpleParabolic);
MULTICORN_DEFINE_ERROR(PetalEscape);
MULTICORN_DEFINE_ERROR(OrbitMissesPetal);
MULTICORN_DEFINE_ERROR(LinearizerDegenerate);
MULTICORN_DEFINE_ERROR(BranchLost);
MULTICORN_DEFINE_ERROR(OutsideBand);
MULTICORN_DEFINE_ERROR(HeightNonMonotone);
MULTICORN_DEFINE_ERROR(NotBracketed);
MULTICORN_DEFINE_ERROR(NestingFailed);
MULTICORN_DEFINE_ERROR(WindowInvalid);
MULTICORN_DEFINE_ERROR(ComponentUnmatched);
MULTICORN_DEFINE_ERROR(BranchAmbiguous);
MULTICORN_DEFINE_ERROR(BudgetExceeded);

#undef MULTICORN_DEFINE_ERROR

}  // namespace multicorn
