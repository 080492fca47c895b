from setuptools import setup, find_packages
import os

version = None
with open(os.path.join('curvcheck', '__init__.py'), 'r') as fid:
    for line in (line.strip() for line in fid):
        if line.startswith('__version__'):
            version = line.split('=')[1].strip().strip('\'"')
            break
if version is None:
    raise RuntimeError('Could not determine version')


install_requires = ['numpy',
                    'pandas',
                    'scikit-learn',
                    'scipy',
                    'joblib',
                    'sympy'
                    ]


setup(name='curvcheck',
      version=version,
      description='Numerical verification of Codazzi tensor, Bochner-Weitzenbock and curvature operator identities on a catalog of Riemannian manifolds.',
      license='MIT',
      packages=find_packages(),
      install_requires=install_requires,
      extras_require={'test': ['pytest', 'hypothesis']},
      tests_require=['pytest', 'hypothesis'],
      entry_points={'console_scripts': ['verify=curvcheck.cli:main']},
      zip_safe=False)
