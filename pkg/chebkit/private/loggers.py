from logging import getLogger

logger = getLogger("chebkit")
