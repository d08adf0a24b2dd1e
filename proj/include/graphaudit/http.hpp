#pragma once

// cpp-httplib (TLS enabled via the CPPHTTPLIB_OPENSSL_SUPPORT build flag).
// resolv.h, dragged in through the socket headers, leaks a `_res` object
// macro that collides with Eigen's kernel parameter names; scrub it so both
// can coexist in one translation unit.

#include "httplib.h"

#ifdef _res
#undef _res
#endif
