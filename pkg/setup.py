#!/usr/bin/env python
import os

from setuptools import setup


with open('cubicatlas/version.py') as f:
    exec(f.read())  # defines __version__

here = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(here, 'readme.md'), 'r') as fd:
    long_description = fd.read()


setup(
    name='cubicatlas',
    version=__version__,

    description='components and escape regions of the periodic curves of cubic polynomials',
    long_description=long_description,
    long_description_content_type='text/markdown',

    packages=['cubicatlas',
              'cubicatlas.config',
              'cubicatlas.commands'],
    entry_points={
        'console_scripts': [
            'cubicatlas=cubicatlas.cubicatlas_cmd:execute',
            ],
        },

    include_package_data=True,

    python_requires='>=3.5',
    install_requires=['configobj', 'numpy', 'scipy'],

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Programming Language :: Python :: 3',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],

    test_suite='tests',
    tests_require=['pyfakefs>=3.4', 'mock', 'ddt'],

    # in order to avoid 'zipimport.ZipImportError: bad local file header'
    zip_safe=False,

)
