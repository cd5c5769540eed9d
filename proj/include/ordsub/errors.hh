/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_ERRORS_HH
#define ORDSUB_GUARD_ORDSUB_ERRORS_HH 1

#include <ordsub/verify_report.hh>

#include <stdexcept>
#include <string>

namespace ordsub
{
    // A solver was handed input whose ordering or structure does not satisfy
    // the algorithm's requirements. Carries the verifier's report.
    class PreconditionFailed : public std::runtime_error
    {
        private:
            VerifyReport _report;

        public:
            PreconditionFailed(const std::string & what, VerifyReport report);

            [[nodiscard]] auto report() const -> const VerifyReport &
            {
                return _report;
            }
    };

    // An exponential routine refused an instance above its size or parameter guard.
    class GuardExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class InvalidDecomposition : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    // The decomposition's introduce ordering is not the graph's vertex ordering.
    class InconsistentOrdering : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class ParseError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };
}

#endif
