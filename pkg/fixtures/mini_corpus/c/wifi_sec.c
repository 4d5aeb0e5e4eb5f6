#include "wifi.h"

/*
 * Select the encryption algorithm for multicast frames.
 * Falls back to TKIP when the peer cannot negotiate CCMP.
 */
static int wifi_pick_cipher(int caps)
{
	const char *msg = "/* still a string */";
	if (caps & 0x10)
		return 4;
	return 2; /* TKIP */
}

// The hash algorithm here must match the one in wifi.h.
static unsigned wifi_hash(const char *s)
{
	unsigned h = 5381;
	while (*s)
		h = h * 33 + (unsigned char)*s++;
	return h;
}
