import os
from setuptools import setup

here = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(here, 'README.rst')) as f:
    README = f.read()

setup(
    name='score.ainf',
    version='0.1.0',
    description='Exact A-infinity algebra, Hochschild homology and '
                'split-generation checks of The SCORE Framework',
    long_description=README,
    author='strg.at',
    author_email='score@strg.at',
    url='http://score-framework.org',
    keywords='score framework a-infinity hochschild homology smith normal '
             'form twisted complex',
    packages=['score',
              'score.ainf'],
    namespace_packages=['score'],
    zip_safe=False,
    license='LGPL',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU Lesser General '
            'Public License v3 or later (LGPLv3+)',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    install_requires=[
        'score.init >= 0.3',
        'click',
        'sympy >= 1.9',
        'jsonschema >= 3.0',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'score.cli': [
            'ainf = score.ainf.cli:main',
        ],
        'console_scripts': [
            'score-ainf = score.ainf.cli:main',
        ],
    },
)
