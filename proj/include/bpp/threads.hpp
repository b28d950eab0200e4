#ifndef BPP_THREADS_HPP
#define BPP_THREADS_HPP

namespace bpp {

// Worker count for parallel kernels: hardware default, capped by the
// BPP_THREADS environment variable when set.
int max_workers();

}  // namespace bpp

#endif
