# coding=utf-8
"""pyquadri setup script."""
from setuptools import setup


def readme():
    with open('README.md') as desc:
        return desc.read()


setup(

    name='pyquadri',
    version='0.1.0',
    packages=['pyquadri'],

    python_requires='>=3.8',
    install_requires=[
        'click',
        'numpy>=1.20',
    ],

    description='Exact checks and constructions for quadri-algebras, quadri-bialgebras and their doubles.',
    long_description=readme(),
    long_description_content_type='text/markdown',
    license='LGPLv3+',
    keywords=[
        'quadri-algebra',
        'dendriform',
        'bialgebra',
        'rota-baxter',
        'python',
    ],
    classifiers=[
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU Lesser General Public License v3 or later (LGPLv3+)',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],

    entry_points={
        'console_scripts': [
            'pyquadri = pyquadri.main:main_func',
        ],
    },

    test_suite='tests',
)
