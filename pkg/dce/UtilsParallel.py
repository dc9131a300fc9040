from __future__ import division
from __future__ import absolute_import
import numpy as np
import warnings

try:
    from mpi4py import MPI
    comm = MPI.COMM_WORLD
    rank = comm.Get_rank()
    size = comm.Get_size()
except ImportError:
    #Single process without mpi4py
    comm = None
    rank = 0
    size = 1


def divideTasks(num_tasks, rank, size):
    """
    Split task indices among cores, alternating one task at a time
    e.g. Core 0 | Core 1 | Core 2 | Core 0 | Core 1 | ....
    Arguments:
      num_tasks: number of independent tasks
      rank: ID of this core
      size: number of cores
    Output:
      array of task indices assigned to this core
    """
    if num_tasks <= 0:
        return np.empty(0, dtype=int)
    return np.arange(rank, num_tasks, size, dtype=int)


def gatherResults(local_results, num_tasks):
    """
    Collects the {task index: result} dicts of every core on rank 0.
    Returns the results ordered by task index on rank 0 and None elsewhere.
    """
    if comm is None or size == 1:
        gathered = [local_results]
    else:
        gathered = comm.gather(local_results, root=0)
    if rank != 0:
        return None

    merged = {}
    for part in gathered:
        merged.update(part)
    missing = [i for i in range(num_tasks) if i not in merged]
    if missing:
        warnings.warn_explicit('Tasks %s returned no result' % missing, UserWarning, 'DCE', 0)
    return [merged.get(i) for i in range(num_tasks)]


def broadcast(value):
    if comm is None or size == 1:
        return value
    return comm.bcast(value, root=0)
