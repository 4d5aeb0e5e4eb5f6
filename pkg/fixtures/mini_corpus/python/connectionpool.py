"""Connection pooling helpers."""

import socket

# Enable Nagle's algorithm for proxies, to avoid packet fragmentation.
# We cannot know if the user has added default socket options, so we cannot replace the
# list.
DEFAULT_OPTIONS = [(socket.IPPROTO_TCP, socket.TCP_NODELAY, 0)]

PATTERN = "# this hash sign sits inside a string"


def pool_key(host, port):
    """Build the pool key; the hash algorithm is Python's built-in hash."""
    return hash((host, port))
