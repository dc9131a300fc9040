from setuptools import setup

setup(name='dce',
      version='0.1',
      description='Particle creation in a one-dimensional cavity with a moving wall',
      packages=['dce', 'dce.examples'],
      package_data={'dce.examples': ['*.cfg']},
      install_requires=['numpy', 'scipy', 'h5py'],
      extras_require={'mpi': ['mpi4py'], 'test': ['pytest']},
      scripts=['bin/dce'])
