#include "bhseq/errors.hpp"

namespace bhseq {

void throw_internal(const std::string& what) {
    throw InternalError("internal error: " + what);
}

}  // namespace bhseq
