#pragma once

namespace qrf::parallel {

/// Reads QRF_THREADS and, when it holds a positive integer, caps the OpenMP
/// thread count at that value. Returns the cap now in effect. Malformed
/// values are ignored.
int configure_from_environment();

int max_threads();

}  // namespace qrf::parallel
