#ifndef WIFI_H
#define WIFI_H

#include <stdint.h>

/*Encryption Algorithm for Unicast Packet */
#define WIFI_UNICAST_CIPHER 0x04

/* Hash algorithm used for the pairwise master key. */
#define WIFI_PMK_HASH "sha1 // not a comment"

struct wifi_key {
	uint8_t index;   // key slot
	uint8_t len;
};

#endif /* WIFI_H */
