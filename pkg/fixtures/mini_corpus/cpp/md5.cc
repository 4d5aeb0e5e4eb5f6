#include "md5.h"

namespace {
const char kHex[] = "0123456789abcdef";  // lower-case hex digits
}

/* This is the central step in the MD5 algorithm */
#define MD5STEP(f, w, x, y, z, data, s) \
	( w += f(x, y, z) + data,  w = w<<s | w>>(32-s),  w += x )

// Note: the buffer must be 64-byte aligned.
void MD5Transform(uint32_t buf[4], const uint32_t in[16]);
