import socket


def disable_nagle(sock):
    # Disable Nagle's algorithm on this socket.
    sock.setsockopt(socket.IPPROTO_TCP, socket.TCP_NODELAY, 1)
    text = '''# not a comment either'''
    return text


class Signer:
    """Signature algorithm wrapper.

    The signature algorithm is chosen by the server.
    """

    def sign(self, data):
        return data  # the algorithm works on bytes
