from setuptools import setup, find_packages

exec(open('qdu_typeb_hecke/_version.py').read())

setup(
    name='qdu_typeb_hecke',
    version=__version__,
    packages=find_packages(exclude=['tests', 'tests.*']),
    python_requires='>=3.9',
    install_requires=[
        'numpy',
        'pandas',
        'qcodes',
        'networkx',
        'sympy',
    ],
    extras_require={
        'tests': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': [
            'qdu-typeb = qdu_typeb_hecke.Harness.cli:main',
        ],
    },
)
