from io import open

from setuptools import find_packages, setup

with open('seqconv/__init__.py', 'r') as f:
    for line in f:
        if line.startswith('__version__'):
            version = line.strip().split('=')[1].strip(' \'"')
            break
    else:
        version = '0.0.1'

with open('README.md', 'r', encoding='utf-8') as f:
    readme = f.read()

REQUIRES = [
    'click',
    'tzlocal',
    'appdirs',
    'sympy>=1.12'
]

setup(
    name='seqconv',
    version=version,
    description='Exact verification of convolution identities for Horadam, Lucas and Chebyshev sequences.',
    long_description=readme,
    long_description_content_type="text/markdown",
    license='MIT/Apache-2.0',

    keywords=[
        'horadam sequences',
        'lucas sequences',
        'chebyshev polynomials',
        'convolution identities',
        'exact arithmetic',
    ],

    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],

    python_requires='>=3.8',
    install_requires=REQUIRES,
    tests_require=['coverage', 'pytest', 'pytest-datadir'],
    extras_require={
            'dev': [
                'isort',
                'autoflake',
                'black'
            ]
        },

    packages=find_packages(exclude=['tests']),
    entry_points={
        'console_scripts': [
            'seqconv = seqconv.cli:seqconv',
        ],
    },
)
