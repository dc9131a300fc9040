from __future__ import print_function
from builtins import object
import h5py
import numpy
import logging


class Default(object):
    pass


class RunStore(object):
    """
    Writes the attributes of an object into an hdf5 file. Dictionaries become groups,
    supported values (numbers, strings, lists of numbers, numpy arrays including complex ones) become datasets.
    """
    def __init__(self, obj, file):
        self.f = h5py.File(file, 'w')
        self.cwd = ''
        try:
            for name in obj.__dict__:
                self.dispatch(getattr(obj, name), name)
        finally:
            self.f.close()

    def pushdir(self, dir):
        '''move down a level and keep track of what hdf directory level we are in'''
        self.cwd += '/' + dir

    def popdir(self):
        '''move up a level'''
        self.cwd = self.cwd[:self.cwd.rfind('/')]

    def typeok(self, obj):
        '''check if we support serializing this type to hdf'''
        allowed = (bool, int, float, complex, list, tuple, numpy.ndarray, numpy.number, numpy.bool_)
        return isinstance(obj, allowed)

    def storevalue(self, v, name):
        self.f[self.cwd + '/' + name] = v

    def dict(self, d, name):
        '''called for every dictionary level to create a new hdf group'''
        self.f.require_group(self.cwd + '/' + name)
        self.pushdir(name)
        for k in list(d.keys()):
            self.dispatch(d[k], str(k))
        self.popdir()

    def dispatch(self, obj, name):
        '''either persist a supported object, or look into a dictionary'''
        if obj is None:
            return
        if isinstance(obj, dict):
            self.dict(obj, name)
        elif isinstance(obj, str):
            self.storevalue(obj.encode('utf-8'), name)
        elif isinstance(obj, (list, tuple)) and any(isinstance(entry, str) for entry in obj):
            self.storevalue([str(entry).encode('utf-8') for entry in obj], name)
        elif self.typeok(obj):
            self.storevalue(obj, name)
        else:
            logging.warning('DCE FileInterface.py: variable "' + name + '" of type "' + type(obj).__name__ + '" not supported')


class RunLoad(object):
    def __init__(self, file):
        self.obj = Default()
        self.f = h5py.File(file, 'r')
        try:
            self.f.visititems(self.loadCallBack)
        finally:
            self.f.close()

    def value(self):
        dataset = self.f[self.fullname]
        if h5py.check_string_dtype(dataset.dtype) is not None:
            v = dataset.asstr()[...]
        else:
            v = dataset[...]
        if v.dtype.kind in ('S', 'O'):
            v = v.astype(str)
        if v.ndim == 0:
            v = v.item()
        return v

    def setval(self, name, obj):
        '''walk down the dictionary levels named in the hdf path and set the leaf value'''
        if '/' in name:
            dictname, remainder = name.split('/', 1)
            if isinstance(obj, dict):
                child = obj.setdefault(dictname, {})
            else:
                if not hasattr(obj, dictname):
                    setattr(obj, dictname, {})
                child = getattr(obj, dictname)
            self.setval(remainder, child)
        elif isinstance(obj, dict):
            obj[name] = self.value()
        else:
            setattr(obj, name, self.value())

    def loadCallBack(self, name, obj):
        '''called back by h5py visititems for each group/dataset in the file'''
        if isinstance(obj, h5py.Group):
            return
        self.fullname = name
        self.setval(name, self.obj)


def Load(file):
    '''takes a string filename and returns an object whose attributes mirror the file hierarchy'''
    return RunLoad(file).obj


def Save(obj, file):
    '''store the attributes of obj in an hdf5 file; dictionaries become groups'''
    RunStore(obj, file)
