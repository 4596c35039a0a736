import os
import re

from .content import check_file, check_directory, read_text_file, write_file, system_path


PHIN_EXT = '.txt'
JSON_EXT = '.json'
CSV_EXT = '.csv'

KINDS = {'phin': PHIN_EXT,
         'monodromy': JSON_EXT,
         'atlas': JSON_EXT,
         'report': JSON_EXT,
         'plot': CSV_EXT}


def filter_filename(filename, kind):
    """ Return the period of a cache file name of the given kind,
        or None if the name does not match.
    """
    pattern = r'^{}_(\d+){}$'.format(kind, re.escape(KINDS[kind]))
    match = re.match(pattern, filename)
    if match is not None:
        return int(match.group(1))


class FileBroker(object):
    """ Handles all access to the files of the cache directory.

        * Does *absolutely no* encoding/decoding.
        * Communicate failure with exceptions.
    """

    def __init__(self, directory, create=False):
        self.directory = os.path.expanduser(directory)
        if create:
            self._create()
        check_directory(self.directory)

    def _create(self):
        """Create the cache directory if absent"""
        if not check_directory(self.directory, fail=False):
            os.makedirs(system_path(self.directory))

    def path(self, kind, n):
        """`<kind>_<n><ext>` inside the cache directory."""
        if kind not in KINDS:
            raise ValueError('unknown cache file kind: {}'.format(kind))
        return os.path.join(self.directory, '{}_{}{}'.format(kind, n, KINDS[kind]))

    def exists(self, kind, n):
        return check_file(self.path(kind, n), fail=False)

    def pull(self, kind, n):
        return read_text_file(self.path(kind, n))

    def push(self, kind, n, data):
        """Put content to disk. Will gladly override anything standing in its way."""
        write_file(self.path(kind, n), data)
        return self.path(kind, n)

    def listing(self, kind):
        """Periods with a cache file of the given kind, sorted."""
        periods = []
        for filename in os.listdir(system_path(self.directory)):
            n = filter_filename(filename, kind)
            if n is not None:
                periods.append(n)
        return sorted(periods)
