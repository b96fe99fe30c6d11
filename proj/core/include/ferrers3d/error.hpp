#ifndef FERRERS3D_ERROR_HPP
#define FERRERS3D_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ferrers3d {

// Failure categories.  The command line tool maps them to exit codes:
// invalid_input and parse exit with 2, resource_limit with 3.  Mathematical
// failures (a certificate that does not hold) are reported through verdicts,
// never through exceptions.
enum class errc {
    invalid_input,
    precondition,
    parse,
    resource_limit,
};

class error : public std::runtime_error {
    errc code_;

  public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const noexcept { return code_; }
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

} // namespace ferrers3d

#endif
