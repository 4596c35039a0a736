from . import filebroker
from . import endecoder
from . import __version__


class DataBroker(object):
    """ DataBroker class

        This is aimed at being a simple, high level interface to the content stored on disk.
        Requests are optimistically made, and exceptions are raised if something goes wrong.
    """

    def __init__(self, directory, create=False):
        self.filebroker = filebroker.FileBroker(directory, create=create)
        self.endecoder = endecoder.EnDecoder()

    def close(self):
        pass

    # Phi_n polynomials

    def pull_phin(self, n):
        data_raw = self.filebroker.pull('phin', n)
        stored_n, poly = self.endecoder.decode_phin(data_raw)
        if stored_n != n:
            raise self.endecoder.PhinDecodingError(
                'file for period {} holds Phi_{}'.format(n, stored_n), data_raw)
        return poly

    def push_phin(self, n, poly):
        return self.filebroker.push('phin', n, self.endecoder.encode_phin(n, poly))

    # JSON results

    def pull_result(self, kind, n):
        """Stored result, checked against the running version."""
        data = self.endecoder.decode_json(self.filebroker.pull(kind, n))
        if data.get('version') != __version__:
            raise ValueError('{} result for period {} not matching code version.'.format(kind, n))
        return data['result']

    def push_result(self, kind, n, data):
        content = {'version': __version__, 'result': data}
        return self.filebroker.push(kind, n, self.endecoder.encode_json(content))

    # CSV tables

    def pull_table(self, kind, n):
        return self.endecoder.decode_csv(self.filebroker.pull(kind, n))

    def push_table(self, kind, n, header, rows):
        return self.filebroker.push(kind, n, self.endecoder.encode_csv(header, rows))

    def exists(self, kind, n):
        return self.filebroker.exists(kind, n)

    def listing(self, kind):
        return self.filebroker.listing(kind)

    def path(self, kind, n):
        return self.filebroker.path(kind, n)
