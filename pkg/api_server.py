#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
孤立曲线检验 - FastAPI服务器
将锥计算、判据检验、表格重现与网格扫描封装为RESTful API服务

提供的接口：
- GET /health - 健康检查
- POST /cone - 计算有效锥与 nef 锥
- POST /check - 检验 (Y, g, d) 或有理曲面情形
- GET /tables - 重现无 -2 类表与锥表
- POST /scan - (g, d) 网格扫描
"""

import sys
import os
import logging
import threading
from contextlib import asynccontextmanager
from datetime import datetime
from typing import Any, Dict, Optional

# 添加项目路径
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field
import uvicorn

from config import RunConfig, get_config, load_run_config, setup_logging
from isolated_curves import __version__
from isolated_curves.cones import effective_cone
from isolated_curves.models import CheckerError, GramForm
from isolated_curves.pipeline import build_tables, check_k3_case, check_rational_case, scan_grid, select_row
from isolated_curves.qform import has_minus_two_class, minus_two_classes_bounded
from isolated_curves.render import cone_payload, tables_tsv

# 设置日志
setup_logging()
logger = logging.getLogger(__name__)

# ===== 初始化函数 =====

@asynccontextmanager
async def lifespan(app: FastAPI):
    """启动时加载运行配置"""
    try:
        logger.info("🚀 正在启动孤立曲线检验 API 服务...")
        run_config = get_run_config()
        logger.info("✅ 运行配置加载成功: %d 行嵌入表", len(run_config.embedding_rows))
    except CheckerError as e:
        logger.error(f"❌ 服务启动失败: {e}")
        raise
    yield
    logger.info("👋 孤立曲线检验 API 服务已关闭")


# 创建FastAPI应用
app = FastAPI(
    lifespan=lifespan,
    title="孤立曲线检验 API",
    description="CICY 三维簇中孤立光滑曲线存在性的精确数值检验",
    version=__version__,
    docs_url="/docs",
    redoc_url="/redoc"
)

# 添加CORS中间件
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# 全局变量
_run_config: Optional[RunConfig] = None
_run_config_lock = threading.Lock()
_started_at = datetime.now()


def get_run_config() -> RunConfig:
    """首次使用时加载运行配置"""
    global _run_config
    with _run_config_lock:
        if _run_config is None:
            _run_config = load_run_config()
        return _run_config


# ===== 请求模型 =====

class ConeRequest(BaseModel):
    """Gram 形式 (H^2, H.C, C^2)"""
    h: int = Field(..., description="H^2")
    d: int = Field(..., description="H.C")
    c: int = Field(..., description="C^2")


class CheckRequest(BaseModel):
    """K3 情形给出 y_type/g/d, 有理曲面情形只给 rational"""
    y_type: Optional[str] = Field(None, description="CICY 类型, 如 \"5\" 或 \"(2,4)\"")
    g: Optional[int] = Field(None, ge=0, description="亏格")
    d: Optional[int] = Field(None, ge=1, description="次数")
    x_type: Optional[str] = Field(None, description="可选: 指定 K3 类型 X")
    rational: Optional[str] = Field(None, description="有理曲面情形: cubic_33 或 quadric_24")


class ScanRequest(BaseModel):
    y_type: str = Field(..., description="CICY 类型")
    g_min: int = Field(..., ge=0)
    g_max: int = Field(..., ge=0)
    d_min: int = Field(..., ge=1)
    d_max: int = Field(..., ge=1)
    x_type: Optional[str] = None


# ===== 核心API接口 =====

@app.get("/health")
async def health_check():
    """健康检查接口"""
    return {
        "status": "healthy",
        "service": "孤立曲线检验 API",
        "timestamp": datetime.now().isoformat(),
        "uptime_seconds": int((datetime.now() - _started_at).total_seconds()),
        "version": __version__
    }


@app.post("/cone")
def compute_cone(request: ConeRequest) -> Dict[str, Any]:
    try:
        form = GramForm(request.h, request.d, request.c)
        cone = effective_cone(form)
        sample = minus_two_classes_bounded(form, get_config()['cone']['sample_bound'])
        payload = cone_payload(form, cone, sample)
        payload["has_minus_two"] = has_minus_two_class(form)
        return payload
    except CheckerError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"❌ 锥计算失败: {e}")
        raise HTTPException(status_code=500, detail="内部错误")


@app.post("/check")
def check_case(request: CheckRequest) -> Dict[str, Any]:
    try:
        if request.rational:
            report = check_rational_case(request.rational)
        else:
            if request.y_type is None or request.g is None or request.d is None:
                raise HTTPException(status_code=400, detail="需要 y_type、g、d 或 rational")
            row = select_row(get_run_config(), request.y_type, request.g, request.d, request.x_type)
            report = check_k3_case(row, request.g, request.d)
        logger.info("检验 %s: %s", report.subject, report.verdict)
        return report.to_dict()
    except HTTPException:
        raise
    except CheckerError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"❌ 检验失败: {e}")
        raise HTTPException(status_code=500, detail="内部错误")


@app.get("/tables")
def tables() -> Dict[str, Any]:
    try:
        rows = build_tables(get_run_config())
        return {"rows": [row.to_dict() for row in rows], "tsv": tables_tsv(rows)}
    except CheckerError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/scan")
def scan(request: ScanRequest) -> Dict[str, Any]:
    try:
        result = scan_grid(
            get_run_config(),
            request.y_type,
            range(request.g_min, request.g_max + 1),
            range(request.d_min, request.d_max + 1),
            x_type=request.x_type,
        )
        return result.to_dict()
    except CheckerError as e:
        raise HTTPException(status_code=400, detail=str(e))


# ===== 启动服务器 =====

def start_server(host: Optional[str] = None, port: Optional[int] = None, reload: bool = False):
    """启动FastAPI服务器"""
    api_config = get_config()['api']
    host = host or api_config['host']
    port = port or api_config['port']
    print("🚀 启动孤立曲线检验 API 服务器...")
    print(f"📊 服务地址: http://{host}:{port}")
    print(f"📖 API文档: http://{host}:{port}/docs")

    uvicorn.run(
        "api_server:app",
        host=host,
        port=port,
        reload=reload,
        log_level="info"
    )


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="孤立曲线检验 API 服务器")
    parser.add_argument("--host", default=None, help="服务器主机地址")
    parser.add_argument("--port", type=int, default=None, help="服务器端口")
    parser.add_argument("--reload", action="store_true", help="开发模式自动重载")

    args = parser.parse_args()
    start_server(args.host, args.port, args.reload)
