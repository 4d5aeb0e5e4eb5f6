#include <cstdint>
#include <string>

// MD5 algorithm: process one 64-byte block of input.
void md5_block(uint32_t state[4], const unsigned char block[64])
{
    auto raw = R"(/* raw string, not a comment */)";
    (void)raw;
}

/*
 * Fast path for the compression algorithm used by the archive writer.
 */
std::string compress(const std::string &in);

/* A compression algorithm that trades ratio for speed. */
int level = 1'000;  // digit separator, not a char literal
