"""Plain file access for the cache directory.

Text is always utf-8 with '\\n' line endings, so that two runs with the
same seed produce byte-identical files.
"""

import os


PARTIAL_SUFFIX = '.partial'


class UnreadableFile(IOError):

    def __init__(self, path, reason):
        super(UnreadableFile, self).__init__('{}: {}'.format(path, reason))
        self.path = path


def system_path(path):
    return os.path.abspath(os.path.expanduser(path))


def _check(path, predicate, complaint, fail):
    if os.path.exists(path):
        if predicate(path):
            return True
        if fail:
            raise IOError('{} is not a {}.'.format(path, complaint))
        return False
    if fail:
        raise IOError('File does not exist: {}'.format(path))
    return False


def check_file(path, fail=True):
    return _check(system_path(path), os.path.isfile, 'file', fail)


def check_directory(path, fail=True):
    return _check(system_path(path), os.path.isdir, 'directory', fail)


def read_text_file(filepath):
    check_file(filepath)
    try:
        with open(system_path(filepath), 'r', encoding='utf-8', newline='') as f:
            return f.read()
    except UnicodeDecodeError:
        raise UnreadableFile(filepath, 'not utf-8 text')


def write_file(filepath, data):
    """Replace the file with `data` in one step.

    The text goes to a sibling `.partial` file first; an interrupted
    run leaves the previous content, never half of the new one.
    """
    syspath = system_path(filepath)
    check_directory(os.path.dirname(syspath))
    partial = syspath + PARTIAL_SUFFIX
    with open(partial, 'w', encoding='utf-8', newline='') as f:
        f.write(data)
    os.replace(partial, syspath)
