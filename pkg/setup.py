#!/usr/bin/env python
from os import path
from setuptools import setup
try:
    from pypandoc import convert_file
    read_md = lambda f: convert_file(f, 'rst')
except ImportError:
    print("warning: pypandoc not found; README.md is used unconverted.")
    read_md = lambda f: open(f, 'r').read()

requirements = ["argparse", "termcolor", "six", "numpy", "scipy", "pandas",
                "joblib", "jsonschema"]

setup(name='mbuniq',
      version='0.1.1',
      description=('Causal-influence measures, Markov boundary discovery and '
                   'uniqueness tests for discrete distributions.'),
      long_description=read_md('README.md') if path.isfile('README.md') else "",
      license='MIT',
      setup_requires=['pytest-runner'],
      tests_require=['pytest'],
      install_requires=requirements,
      packages=['mbuniq', 'mbuniq.dist', 'mbuniq.citest', 'mbuniq.algorithms',
                'mbuniq.harness'],
      scripts=['mbuniq/mbq.py'],
      entry_points={'console_scripts': ['mbq=mbuniq.mbq:main']},
      package_data={'mbuniq': ['config/*.cfg', 'config/*.json']},
      include_package_data=True,
      classifiers=[
          'Development Status :: 3 - Alpha',
          'Intended Audience :: Science/Research',
          'Operating System :: POSIX :: Linux',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Mathematics',
      ],
     )
